#include "jtsnf/unipoly.hpp"

namespace jtsnf {

IntPoly clear_denominators(const UniPoly<Rational>& a) {
    BigInt l(1);
    for (const auto& c : a.coeffs()) l = ::lcm(l, BigInt(c.get_den()));
    std::vector<BigInt> out(a.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        const Rational& c = a.coeffs()[i];
        out[i] = BigInt(c.get_num()) * (l / BigInt(c.get_den()));
    }
    return IntPoly(std::move(out));
}

UniPoly<Rational> to_rational_poly(const IntPoly& p, char var) {
    std::vector<Rational> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Rational(p.coeffs()[i]);
    return UniPoly<Rational>(var, std::move(out));
}

UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("undefined gcd");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    char var = a.is_constant() ? b.var() : a.var();
    IntPoly g = IntPoly::gcd(clear_denominators(a), clear_denominators(b));
    return monic(to_rational_poly(g, var));
}

}  // namespace jtsnf
