#include "jtsnf/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace jtsnf {

namespace {

// Divide out shared integer content and make the denominator's leading
// coefficient positive. Assumes num/den already share no nonconstant factor.
void normalize_content_sign(IntPoly& num, IntPoly& den) {
    BigInt cg = ::gcd(num.content(), den.content());
    if (cg != 1) {
        num = IntPoly::divexact(num, IntPoly(cg));
        den = IntPoly::divexact(den, IntPoly(cg));
    }
    if (sgn(den.lc()) < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

RatFuncQ::RatFuncQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    reduce();
}

void RatFuncQ::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = IntPoly::divexact(num_, g);
        den_ = IntPoly::divexact(den_, g);
    }
    normalize_content_sign(num_, den_);
}

RatFuncQ RatFuncQ::from_rational(const Rational& r) {
    return RatFuncQ(IntPoly(BigInt(r.get_num())), IntPoly(BigInt(r.get_den())));
}

RatFuncQ RatFuncQ::q_power(int k) {
    RatFuncQ r;
    if (k >= 0) {
        r.num_ = IntPoly::monomial(k);
        r.den_ = IntPoly(1);
    } else {
        r.num_ = IntPoly(1);
        r.den_ = IntPoly::monomial(-k);
    }
    return r;
}

RatFuncQ RatFuncQ::operator+(const RatFuncQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RatFuncQ r;
    // Henrici: only the common part of the denominators can cancel.
    IntPoly d = IntPoly::gcd(den_, o.den_);
    if (d.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        if (r.num_.is_zero()) return RatFuncQ();
        r.den_ = den_ * o.den_;
    } else {
        IntPoly da = IntPoly::divexact(den_, d);
        IntPoly db = IntPoly::divexact(o.den_, d);
        IntPoly t = num_ * db + o.num_ * da;
        if (t.is_zero()) return RatFuncQ();
        IntPoly g = IntPoly::gcd(t, d);
        r.num_ = g.is_one() ? std::move(t) : IntPoly::divexact(t, g);
        r.den_ = da * IntPoly::divexact(d, g) * db;
    }
    normalize_content_sign(r.num_, r.den_);
    return r;
}

RatFuncQ RatFuncQ::operator-(const RatFuncQ& o) const { return *this + (-o); }

RatFuncQ RatFuncQ::operator*(const RatFuncQ& o) const {
    if (is_zero() || o.is_zero()) return RatFuncQ();
    // cross-cancel first so the reduction gcds stay small
    IntPoly g1 = IntPoly::gcd(num_, o.den_);
    IntPoly g2 = IntPoly::gcd(o.num_, den_);
    RatFuncQ r;
    r.num_ = IntPoly::divexact(num_, g1) * IntPoly::divexact(o.num_, g2);
    r.den_ = IntPoly::divexact(den_, g2) * IntPoly::divexact(o.den_, g1);
    normalize_content_sign(r.num_, r.den_);
    return r;
}

RatFuncQ RatFuncQ::operator/(const RatFuncQ& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    RatFuncQ inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (sgn(inv.den_.lc()) < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r(*this);
    r.num_ = -r.num_;
    return r;
}

std::string RatFuncQ::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool field_needs_parens(const RatFuncQ& a) {
    if (!a.den().is_one()) return true;
    // a bare monomial with coefficient +-1 reads fine unparenthesized
    const IntPoly& n = a.num();
    int nonzero = 0;
    for (const auto& c : n.coeffs())
        if (sgn(c) != 0) ++nonzero;
    if (nonzero != 1) return true;
    return !(abs(n.lc()) == 1);
}

}  // namespace jtsnf
