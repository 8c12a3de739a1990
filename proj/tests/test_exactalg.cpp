#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jtsnf/ratfunc.hpp"
#include "jtsnf/unipoly.hpp"

using namespace jtsnf;

namespace {

PolyN npoly(std::vector<Rational> ascending) { return PolyN('n', std::move(ascending)); }

PolyN random_npoly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d + 1));
    for (auto& x : c) x = make_rational(BigInt(num(rng)), BigInt(den(rng)));
    return PolyN('n', std::move(c));
}

RatFuncQ random_ratfunc(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&] {
        std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return IntPoly(std::move(c));
    };
    IntPoly den = poly();
    while (den.is_zero()) den = poly();
    return RatFuncQ(poly(), den);
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational r = make_rational(BigInt(4), BigInt(-6));
    CHECK(r.get_num() == -2);
    CHECK(r.get_den() == 3);
    CHECK(make_rational(BigInt(0), BigInt(7)) == Rational(0));
}

TEST_CASE("polynomial division examples") {
    // (n^2 - 1) / (n - 1) = (n + 1, 0)
    auto [q1, r1] = divrem(npoly({-1, 0, 1}), npoly({-1, 1}));
    CHECK(q1 == npoly({1, 1}));
    CHECK(r1.is_zero());

    // n^3 / n^2 = (n, 0)
    auto [q2, r2] = divrem(PolyN::monomial('n', 3), PolyN::monomial('n', 2));
    CHECK(q2 == PolyN::monomial('n', 1));
    CHECK(r2.is_zero());

    // (n^2 + 1) / (n + 1) = (n - 1, 2), long division done by hand
    auto [q3, r3] = divrem(npoly({1, 0, 1}), npoly({1, 1}));
    CHECK(q3 == npoly({-1, 1}));
    CHECK(r3 == PolyN::constant(Rational(2)));

    CHECK_THROWS_WITH_AS((void)divrem(npoly({1, 1}), PolyN()), "zero divisor",
                         std::domain_error);
}

TEST_CASE("polynomial gcd examples") {
    // gcd(n^2 - 1, n^2 - n) = n - 1: factor both, intersect factor multisets
    CHECK(poly_gcd(npoly({-1, 0, 1}), npoly({0, -1, 1})) == npoly({-1, 1}));

    // gcd(p, 0) = monic(p)
    PolyN p = npoly({2, 4});
    CHECK(poly_gcd(p, PolyN()) == npoly({Rational(1, 2), 1}));

    // coprime linear factors
    CHECK(poly_gcd(npoly({-1, 1}), npoly({1, 1})).is_one());

    CHECK_THROWS_AS((void)poly_gcd(PolyN(), PolyN()), std::domain_error);
}

TEST_CASE("make_monic") {
    // 3n^2 + 3n -> (3, n^2 + n)
    auto [u, m] = make_monic(npoly({0, 3, 3}));
    CHECK(u == Rational(3));
    CHECK(m == npoly({0, 1, 1}));

    auto [u1, m1] = make_monic(PolyN::constant(Rational(1)));
    CHECK(u1 == Rational(1));
    CHECK(m1.is_one());

    CHECK_THROWS_AS(make_monic(PolyN()), std::domain_error);

    // over Q(q): (1-q)y - (1-q) -> unit (1-q), monic y - 1
    RatFuncQ one_minus_q = RatFuncQ(1) - RatFuncQ::q_power(1);
    PolyY a('y', {-one_minus_q, one_minus_q});
    auto [uq, mq] = make_monic(a);
    CHECK(uq == one_minus_q);
    CHECK(mq == PolyY('y', {RatFuncQ(-1), RatFuncQ(1)}));
    CHECK(UniPoly<RatFuncQ>::constant(uq) * mq == a);
}

TEST_CASE("rational function arithmetic") {
    // (1 - q^2)/(1 - q) = 1 + q, by polynomial division
    RatFuncQ r(IntPoly({1, 0, -1}), IntPoly({1, -1}));
    CHECK(r == RatFuncQ(IntPoly({1, 1})));

    RatFuncQ x(IntPoly({3, 1}), IntPoly({0, 2}));
    CHECK(x + RatFuncQ() == x);
    CHECK(RatFuncQ::q_power(-1) * RatFuncQ::q_power(1) == RatFuncQ(1));
    CHECK_THROWS_AS(x / RatFuncQ(), std::domain_error);
}

TEST_CASE("ratfunc canonical form via different routes") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        // same value, two routes
        RatFuncQ left = (a + b) * c;
        RatFuncQ right = a * c + b * c;
        CHECK(left == right);
        CHECK(left.num() == right.num());
        CHECK(left.den() == right.den());
        if (!left.is_zero()) CHECK(sgn(left.den().lc()) > 0);
        CHECK(IntPoly::gcd(left.num(), left.den()).is_one());
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        PolyN a = random_npoly(rng, 4), b = random_npoly(rng, 4), c = random_npoly(rng, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("divrem round trip on random pairs") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        PolyN a = random_npoly(rng, 6);
        PolyN b = random_npoly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}

TEST_CASE("gcd divides both inputs; multiplicativity; euclid agrees") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        PolyN a = random_npoly(rng, 4);
        PolyN b = random_npoly(rng, 4);
        if (a.is_zero() && b.is_zero()) continue;
        PolyN g = poly_gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(poly_gcd_euclid(a, b) == g);  // subresultant route == euclid route
    }
    // gcd(a*g, b*g) = monic(g) for coprime a, b
    PolyN a = npoly({1, 1});        // n + 1
    PolyN b = npoly({-1, 1});       // n - 1
    PolyN g = npoly({0, 0, 2});     // 2n^2
    CHECK(poly_gcd(a * g, b * g) == PolyN::monomial('n', 2));
}

TEST_CASE("rendering") {
    CHECK(npoly({0, -1, 0, 1}).str() == "n^3 - n");
    CHECK(npoly({Rational(1, 3), 0, 2}).str() == "2*n^2 + 1/3");
    CHECK(PolyN().str() == "0");

    RatFuncQ qinv = RatFuncQ::q_power(-1);
    CHECK(qinv.str() == "(1)/(q)");
    CHECK((RatFuncQ(1) + RatFuncQ::q_power(1)).str() == "q + 1");
    PolyY p('y', {RatFuncQ(0), -(RatFuncQ(1) + RatFuncQ::q_power(1)), RatFuncQ(1)});
    CHECK(p.str() == "y^2 - (q + 1)*y");
}
