#pragma once

#include <string>
#include <vector>

#include "jtsnf/rational.hpp"

namespace jtsnf {

// Dense univariate polynomial over Z, coefficients ascending by exponent.
// Backs RatFuncQ (numerator/denominator in q) and the integer-cleared gcd
// path for rational-coefficient polynomials.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v);
    explicit IntPoly(BigInt v);
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(int deg, BigInt coef = 1);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& lc() const;
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // gcd of all coefficients, canonically >= 0; 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitive_part() const;

    // Exact quotient; throws std::domain_error if the division is not exact.
    static IntPoly divexact(const IntPoly& a, const IntPoly& b);
    static bool divides(const IntPoly& b, const IntPoly& a);

    // Subresultant PRS gcd, content included; result has positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);
    static IntPoly lcm(const IntPoly& a, const IntPoly& b);

    std::string str(char var = 'q') const;

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace jtsnf
