#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jtsnf/intpoly.hpp"
#include "jtsnf/ratfunc.hpp"
#include "jtsnf/rational.hpp"

namespace jtsnf {

// Dense univariate polynomial over an exact coefficient field F, tagged with
// its variable name ('n' for Q[n], 'y' for Q(q)[y]). Constants carry no
// variable and mix freely with any ring; combining two polynomials in
// different variables throws. Zero is the empty coefficient vector.
template <Field F>
class UniPoly {
public:
    UniPoly() = default;  // zero
    explicit UniPoly(F c) : c_{std::move(c)} { trim(); }
    UniPoly(char var, std::vector<F> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(F c) { return UniPoly(std::move(c)); }
    static UniPoly monomial(char var, int deg, F coef = F(1)) {
        std::vector<F> c(static_cast<size_t>(deg) + 1, F());
        c.back() = std::move(coef);
        return UniPoly(var, std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && jtsnf::is_one(c_[0]); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    char var() const { return var_; }

    const F& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F();
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.var_ = joint_var(o);
        r.c_.resize(std::max(c_.size(), o.c_.size()), F());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        r.trim();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r;
        r.var_ = joint_var(o);
        r.c_.resize(std::max(c_.size(), o.c_.size()), F());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
        r.trim();
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        UniPoly r;
        r.var_ = joint_var(o);
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, F());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (jtsnf::is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UniPoly operator*(const F& s) const {
        UniPoly r(*this);
        if (jtsnf::is_zero(s)) return UniPoly();
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    bool operator==(const UniPoly& o) const { return var_same(o) && c_ == o.c_; }

    F eval(const F& x) const {
        F acc = F();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> d(c_.size() - 1, F());
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
        return UniPoly(var_, std::move(d));
    }

    // Descending powers, explicit '^': "n^3 - n", "(q + 1)*y^2 - y".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const F& ck = c_[static_cast<size_t>(k)];
            if (jtsnf::is_zero(ck)) continue;
            bool neg = field_is_negative(ck);
            F mag = neg ? F(-ck) : ck;
            if (first) {
                if (neg) os << '-';
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (k == 0) {
                os << render_coeff(mag);
            } else {
                if (!jtsnf::is_one(mag)) os << render_coeff(mag) << '*';
                os << var_;
                if (k > 1) os << '^' << k;
            }
        }
        return os.str();
    }

private:
    static std::string render_coeff(const F& c) {
        if (field_needs_parens(c)) return "(" + field_str(c) + ")";
        return field_str(c);
    }
    bool var_same(const UniPoly& o) const {
        return var_ == o.var_ || is_constant() || o.is_constant();
    }
    char joint_var(const UniPoly& o) const {
        if (!is_constant() && !o.is_constant() && var_ != o.var_)
            throw std::invalid_argument("variable mismatch");
        return is_constant() ? o.var_ : var_;
    }
    void trim() {
        while (!c_.empty() && jtsnf::is_zero(c_.back())) c_.pop_back();
        if (c_.size() <= 1) var_ = 0;  // constants are variable-agnostic
    }

    char var_ = 0;
    std::vector<F> c_;
};

template <Field F>
UniPoly<F> operator*(const F& s, const UniPoly<F>& p) {
    return p * s;
}

// Euclidean division: a = q*b + r with deg r < deg b. Exact field arithmetic.
template <Field F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.is_zero() || a.degree() < b.degree()) return {UniPoly<F>(), a};
    char var = a.is_constant() ? b.var() : a.var();
    std::vector<F> rem = a.coeffs();
    std::vector<F> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, F());
    const std::vector<F>& bc = b.coeffs();
    int db = b.degree();
    int dr = a.degree();
    while (dr >= db) {
        F q = rem[static_cast<size_t>(dr)] / b.lc();
        quot[static_cast<size_t>(dr - db)] = q;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(dr - db + i);
            rem[idx] = rem[idx] - q * bc[static_cast<size_t>(i)];
        }
        --dr;
        while (dr >= 0 && jtsnf::is_zero(rem[static_cast<size_t>(dr)])) --dr;
        if (dr < 0) break;
    }
    rem.resize(dr < 0 ? 0 : static_cast<size_t>(dr) + 1);
    return {UniPoly<F>(var, std::move(quot)), UniPoly<F>(var, std::move(rem))};
}

template <Field F>
bool divides(const UniPoly<F>& b, const UniPoly<F>& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).second.is_zero();
}

// unit * monic = a, with monic having leading coefficient 1.
template <Field F>
std::pair<F, UniPoly<F>> make_monic(const UniPoly<F>& a) {
    if (a.is_zero()) throw std::domain_error("monic normalization of zero");
    F u = a.lc();
    return {u, a * (F(1) / u)};
}

template <Field F>
UniPoly<F> monic(const UniPoly<F>& a) {
    if (a.is_zero()) return a;
    return a * (F(1) / a.lc());
}

// Plain Euclidean gcd over the coefficient field, remainders normalized monic
// at every step. Kept public as the cross-check partner of the subresultant
// route below.
template <Field F>
UniPoly<F> poly_gcd_euclid(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("undefined gcd");
    while (!b.is_zero()) {
        UniPoly<F> r = divrem(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

template <Field F>
UniPoly<F> poly_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    return poly_gcd_euclid(a, b);
}

// Integer-cleared form of a rational-coefficient polynomial: primitive
// IntPoly plus the scale it absorbs.
IntPoly clear_denominators(const UniPoly<Rational>& a);
UniPoly<Rational> to_rational_poly(const IntPoly& p, char var);

// Rational coefficients take the subresultant route: clear denominators, run
// the integer PRS, normalize monic. Euclid on fractions is the slow oracle.
UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b);

using PolyN = UniPoly<Rational>;  // Q[n]
using PolyY = UniPoly<RatFuncQ>;  // Q(q)[y]

}  // namespace jtsnf
