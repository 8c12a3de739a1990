#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

namespace jtsnf {

// Exact scalar arithmetic. BigInt/Rational are GMP types; mpq_class keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0, zero = 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }

inline std::string field_str(const Rational& a) { return a.get_str(); }

// Display predicates used by the polynomial renderer.
inline bool field_is_negative(const Rational& a) { return sgn(a) < 0; }
inline bool field_needs_parens(const Rational&) { return false; }

// A coefficient field: exact, with value semantics and a canonical equality.
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
    F(1);
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_one(a) } -> std::convertible_to<bool>;
    { field_str(a) } -> std::convertible_to<std::string>;
    { field_is_negative(a) } -> std::convertible_to<bool>;
    { field_needs_parens(a) } -> std::convertible_to<bool>;
};

}  // namespace jtsnf
