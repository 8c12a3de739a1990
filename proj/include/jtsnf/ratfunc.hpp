#pragma once

#include <string>

#include "jtsnf/intpoly.hpp"

namespace jtsnf {

// Element of the rational-function field Q(q), kept in canonical form:
// num/den are integer polynomials in q sharing no nonconstant factor and no
// common integer content, den != 0 with positive leading coefficient, and
// zero is 0/1. Negative powers of q are ordinary elements (q^-1 = 1/q).
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(1) {}
    RatFuncQ(long v) : num_(v), den_(1) {}
    RatFuncQ(IntPoly num, IntPoly den);
    explicit RatFuncQ(IntPoly num) : num_(std::move(num)), den_(1) {}

    static RatFuncQ from_rational(const Rational& r);
    static RatFuncQ q_power(int k);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFuncQ operator+(const RatFuncQ& o) const;
    RatFuncQ operator-(const RatFuncQ& o) const;
    RatFuncQ operator*(const RatFuncQ& o) const;
    RatFuncQ operator/(const RatFuncQ& o) const;
    RatFuncQ operator-() const;
    bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    void reduce();
    IntPoly num_, den_;
};

inline bool is_zero(const RatFuncQ& a) { return a.is_zero(); }
inline bool is_one(const RatFuncQ& a) { return a.is_one(); }
inline std::string field_str(const RatFuncQ& a) { return a.str(); }
inline bool field_is_negative(const RatFuncQ& a) {
    return !a.is_zero() && sgn(a.num().lc()) < 0;
}
bool field_needs_parens(const RatFuncQ& a);

}  // namespace jtsnf
