#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jtsnf/jacobitrudi.hpp"
#include "jtsnf/snf.hpp"

using namespace jtsnf;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

RatFuncQ one_minus_qpow(int k) { return RatFuncQ(1) - RatFuncQ::q_power(k); }
}  // namespace

TEST_CASE("phi_h") {
    CHECK(phi_h(0).is_one());
    CHECK(phi_h(-2).is_zero());
    // binom(n+2,3) = n^3/6 + n^2/2 + n/3
    CHECK(phi_h(3) ==
          PolyN('n', {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
    for (int i = 0; i <= 8; ++i) {
        CHECK(phi_h(i).degree() == i);
        CHECK(phi_h(i).eval(Rational(1)) == Rational(1));  // h_i in one variable
    }
    // phi_h(3) at n=2 counts ssyt of a single row of 3 with entries in {1,2}
    CHECK(phi_h(3).eval(Rational(2)) ==
          Rational(ssyt_count(SkewShape(P({3}), Partition()), 2)));
}

TEST_CASE("q_h") {
    CHECK(q_h(0).is_one());
    CHECK(q_h(-1).is_zero());
    // (1 - y)/(1 - q)
    CHECK(q_h(1) == PolyY('y', {RatFuncQ(1), RatFuncQ(-1)}) *
                        (RatFuncQ(1) / one_minus_qpow(1)));
    // the three-cell case expands to (1-q^2 y)(1-q y)(1-y) / ((1-q^3)(1-q^2)(1-q))
    PolyY num = PolyY('y', {RatFuncQ(1), -RatFuncQ::q_power(2)}) *
                PolyY('y', {RatFuncQ(1), -RatFuncQ::q_power(1)}) *
                PolyY('y', {RatFuncQ(1), RatFuncQ(-1)});
    RatFuncQ den = one_minus_qpow(3) * one_minus_qpow(2) * one_minus_qpow(1);
    CHECK(q_h(3) == num * (RatFuncQ(1) / den));
    for (int i = 0; i <= 6; ++i) {
        CHECK(q_h(i).degree() == i);
        if (i >= 1) CHECK(q_h(i).eval(RatFuncQ(1)).is_zero());  // factor (1 - y)
    }
}

TEST_CASE("bracket") {
    CHECK(bracket(0).is_zero());
    CHECK(bracket(2) == RatFuncQ(IntPoly({1, 1})));  // 1 + q
    // (-3) = -q^-1 - q^-2 - q^-3 = -(q^2 + q + 1)/q^3
    CHECK(bracket(-3) == RatFuncQ(IntPoly({-1, -1, -1}), IntPoly::monomial(3)));
    CHECK(bracket(1).is_one());
    CHECK(bracket(5) == RatFuncQ(IntPoly({1, 1, 1, 1, 1})));
}

TEST_CASE("f_bracket") {
    CHECK(f_bracket(0).is_one());
    CHECK(f_bracket(-1).is_zero());
    CHECK(f_bracket(1) == PolyY::monomial('y', 1));
    for (int k = 0; k <= 6; ++k) CHECK(f_bracket(k).degree() == k);
}

TEST_CASE("substitution identity for each linear factor") {
    // ((1-q)y + 1) - q^k = (1-q) * (y + (k)) for all k, which is the statement
    // that y -> 1/((1-q)y + 1) carries 1 - q^k y to (1-q)(y + (k))/((1-q)y + 1)
    RatFuncQ one_minus_q = one_minus_qpow(1);
    PolyY w('y', {RatFuncQ(1), one_minus_q});
    for (int k = -3; k <= 5; ++k) {
        PolyY lhs = w - PolyY::constant(RatFuncQ::q_power(k));
        PolyY rhs = PolyY('y', {bracket(k), RatFuncQ(1)}) * one_minus_q;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q_h and f_bracket are the same family after substitution") {
    // substituting y -> 1/w with w = (1-q)y + 1 into q_h(m) gives f(m)/w^m:
    // sum_k coeff_k(q_h(m)) * w^(m-k) = f_bracket(m)
    PolyY w('y', {RatFuncQ(1), one_minus_qpow(1)});
    for (int m = 0; m <= 6; ++m) {
        PolyY qh = q_h(m);
        PolyY acc;
        PolyY wpow = PolyY::constant(RatFuncQ(1));
        // walk k = m down to 0 so w^(m-k) builds up incrementally
        for (int k = m; k >= 0; --k) {
            acc = acc + PolyY::constant(qh.coeff(k)) * wpow;
            wpow = wpow * w;
        }
        CHECK(acc == f_bracket(m));
    }
}

TEST_CASE("build_jt") {
    SUBCASE("(2,1) over Q[n]") {
        JTMatrix<Rational> jt = build_jt_n(P({2, 1}), 2);
        CHECK(jt.entries.at(0, 0) == phi_h(2));
        CHECK(jt.entries.at(0, 1) == phi_h(3));
        CHECK(jt.entries.at(1, 0).is_one());
        CHECK(jt.entries.at(1, 1) == PolyN::monomial('n', 1));
    }
    SUBCASE("empty shape is unitriangular with determinant 1") {
        JTMatrix<Rational> jt = build_jt_n(Partition(), 2);
        CHECK(jt.entries.at(0, 0).is_one());
        CHECK(jt.entries.at(1, 1).is_one());
        CHECK(jt.entries.at(1, 0).is_zero());
        CHECK(det(jt.entries).is_one());
        JTMatrix<RatFuncQ> jtq = build_jt_q(Partition(), 2, SpecializationKind::QBracket);
        CHECK(det(jtq.entries).is_one());
    }
    SUBCASE("(1) in the q-integer form") {
        JTMatrix<RatFuncQ> jt = build_jt_q(P({1}), 1, SpecializationKind::QBracket);
        CHECK(jt.entries.at(0, 0) == PolyY::monomial('y', 1));
    }
    CHECK_THROWS_WITH_AS(build_jt_n(P({2, 1}), 1), "t below length", std::invalid_argument);
}

TEST_CASE("submatrix_to_skew") {
    SUBCASE("worked 3x3 example") {
        auto s = submatrix_to_skew(P({7, 6, 6, 5, 3}), 5, {3, 4, 5}, {1, 3, 5});
        REQUIRE(s.has_value());
        CHECK(s->outer() == P({6, 5, 3}));
        CHECK(s->inner() == P({2, 1}));
    }
    SUBCASE("full index sets give the shape itself") {
        auto s = submatrix_to_skew(P({7, 5, 5, 2}), 4, {1, 2, 3, 4}, {1, 2, 3, 4});
        REQUIRE(s.has_value());
        CHECK(s->outer() == P({7, 5, 5, 2}));
        CHECK(s->inner() == Partition());
    }
    SUBCASE("corner block is the union of the innermost hooks") {
        Partition lam = P({7, 5, 5, 2});
        auto s = submatrix_to_skew(lam, 4, {2, 3, 4}, {1, 2, 3});
        REQUIRE(s.has_value());
        CHECK(s->outer() == hook_union(lam, 4, 3));
        CHECK(s->inner() == Partition());
    }
    SUBCASE("degenerate selection returns the zero marker") {
        // rows below the diagonal of h_0's only: strictly upper triangular block
        auto s = submatrix_to_skew(P({1}), 3, {2, 3}, {1, 2});
        CHECK_FALSE(s.has_value());
    }
    CHECK_THROWS_AS(submatrix_to_skew(P({2}), 2, {1, 2}, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(submatrix_to_skew(P({2}), 2, {1, 3}, {1, 2}), std::invalid_argument);
}

TEST_CASE("random submatrices: entries, minors and tableau counts agree") {
    std::mt19937_64 rng(20260809);
    auto parts = partitions_up_to(8);
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> extra(0, 2);
    int shapes_seen = 0, zeros_seen = 0;
    for (int iter = 0; iter < 150; ++iter) {
        Partition lam = parts[pick(rng)];
        int t = lam.length() + extra(rng);
        std::uniform_int_distribution<int> ksel(1, std::min(3, t));
        int k = ksel(rng);
        std::vector<int> all(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i) all[static_cast<size_t>(i)] = i + 1;
        std::vector<int> ri, ci;
        std::sample(all.begin(), all.end(), std::back_inserter(ri), k, rng);
        std::sample(all.begin(), all.end(), std::back_inserter(ci), k, rng);

        JTMatrix<Rational> jt = build_jt_n(lam, t);
        std::vector<int> r0, c0;
        for (int x : ri) r0.push_back(x - 1);
        for (int x : ci) c0.push_back(x - 1);
        PolyN minor_det = det(jt.entries.submatrix(r0, c0));

        auto shape = submatrix_to_skew(lam, t, ri, ci);
        if (!shape) {
            ++zeros_seen;
            CHECK(minor_det.is_zero());
            continue;
        }
        ++shapes_seen;
        // the submatrix is literally the Jacobi-Trudi matrix of the skew shape
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b) {
                int e = shape->outer().part(a) - shape->inner().part(b) - a + b;
                CHECK(jt.entries.at(r0[static_cast<size_t>(a - 1)],
                                    c0[static_cast<size_t>(b - 1)]) == phi_h(e));
            }
        for (int n = 1; n <= 5; ++n)
            CHECK(minor_det.eval(Rational(n)) == Rational(ssyt_count(*shape, n)));
    }
    CHECK(shapes_seen > 0);
    CHECK(zeros_seen > 0);
}
