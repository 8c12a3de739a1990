#include "jtsnf/jacobitrudi.hpp"

#include <cassert>
#include <stdexcept>

namespace jtsnf {

const char* kind_name(SpecializationKind kind) {
    switch (kind) {
        case SpecializationKind::NPoly: return "n";
        case SpecializationKind::QyPoly: return "qy";
        case SpecializationKind::QBracket: return "qbracket";
    }
    return "?";
}

std::optional<SpecializationKind> kind_parse(const std::string& name) {
    if (name == "n") return SpecializationKind::NPoly;
    if (name == "qy") return SpecializationKind::QyPoly;
    if (name == "qbracket") return SpecializationKind::QBracket;
    return std::nullopt;
}

PolyN phi_h(int i) {
    if (i < 0) return PolyN();
    PolyN p = PolyN::constant(Rational(1));
    Rational factorial(1);
    for (int j = 0; j < i; ++j) {
        p = p * PolyN('n', {Rational(j), Rational(1)});  // (n + j)
        factorial *= Rational(j + 1);
    }
    return p * Rational(1 / factorial);
}

PolyY q_h(int i) {
    if (i < 0) return PolyY();
    PolyY p = PolyY::constant(RatFuncQ(1));
    RatFuncQ den(1);
    for (int j = 0; j < i; ++j) {
        p = p * PolyY('y', {RatFuncQ(1), -RatFuncQ::q_power(j)});  // (1 - q^j y)
        den = den * (RatFuncQ(1) - RatFuncQ::q_power(j + 1));
    }
    return p * (RatFuncQ(1) / den);
}

RatFuncQ bracket(int k) {
    if (k == 0) return RatFuncQ();
    RatFuncQ one(1);
    return (one - RatFuncQ::q_power(k)) / (one - RatFuncQ::q_power(1));
}

PolyY f_bracket(int k) {
    if (k < 0) return PolyY();
    PolyY p = PolyY::constant(RatFuncQ(1));
    RatFuncQ den(1);
    for (int j = 0; j < k; ++j) {
        p = p * PolyY('y', {bracket(j), RatFuncQ(1)});  // (y + (j)), with (0) = 0
        den = den * bracket(j + 1);
    }
    return p * (RatFuncQ(1) / den);
}

namespace {

template <Field F, class HFn>
RingMatrix<F> build_entries(const Partition& lambda, int t, HFn&& h) {
    if (t == 0) return RingMatrix<F>(0, 0);
    // exponents repeat along diagonals; compute each h-image once
    const int lo = 1 - t, hi = lambda.part(1) + t - 1;
    std::vector<UniPoly<F>> cache(static_cast<size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) cache[static_cast<size_t>(e - lo)] = h(e);
    RingMatrix<F> m(t, t);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            m.at(i - 1, j - 1) = cache[static_cast<size_t>(lambda.part(i) + j - i - lo)];
    return m;
}

}  // namespace

JTMatrix<Rational> build_jt_n(const Partition& lambda, int t) {
    if (t < lambda.length()) throw std::invalid_argument("t below length");
    return {lambda, t, SpecializationKind::NPoly, build_entries<Rational>(lambda, t, phi_h)};
}

JTMatrix<RatFuncQ> build_jt_q(const Partition& lambda, int t, SpecializationKind kind) {
    if (t < lambda.length()) throw std::invalid_argument("t below length");
    if (kind == SpecializationKind::NPoly)
        throw std::invalid_argument("build_jt_q expects a q-specialization");
    auto h = (kind == SpecializationKind::QyPoly) ? q_h : f_bracket;
    return {lambda, t, kind, build_entries<RatFuncQ>(lambda, t, h)};
}

std::optional<SkewShape> submatrix_to_skew(const Partition& lambda, int t,
                                           const std::vector<int>& rows,
                                           const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k == 0 || cols.size() != rows.size())
        throw std::invalid_argument("row/column index sets must be nonempty and equal-sized");
    auto check = [t](const std::vector<int>& v) {
        for (size_t a = 0; a < v.size(); ++a) {
            if (v[a] < 1 || v[a] > t) throw std::invalid_argument("index out of range");
            if (a > 0 && v[a] <= v[a - 1])
                throw std::invalid_argument("indices must be strictly increasing");
        }
    };
    check(rows);
    check(cols);

    // Normalization C = j_k - k makes sigma_k = 0.
    const int c = cols.back() - k;
    std::vector<int> outer(static_cast<size_t>(k)), inner;
    for (int a = 1; a <= k; ++a)
        outer[static_cast<size_t>(a - 1)] = lambda.part(rows[static_cast<size_t>(a - 1)]) -
                                            rows[static_cast<size_t>(a - 1)] + a + c;
    for (int b = 1; b <= k; ++b) {
        int s = c - cols[static_cast<size_t>(b - 1)] + b;
        if (s > 0) inner.push_back(s);
    }
    for (int a = 1; a <= k; ++a) {
        int sa = (a <= static_cast<int>(inner.size())) ? inner[static_cast<size_t>(a - 1)] : 0;
        if (outer[static_cast<size_t>(a - 1)] < sa) {
#ifndef NDEBUG
            // a degenerate shape must mean an identically-zero minor
            auto jt = build_jt_n(lambda, t);
            std::vector<int> ri, ci;
            for (int x : rows) ri.push_back(x - 1);
            for (int x : cols) ci.push_back(x - 1);
            assert(det(jt.entries.submatrix(ri, ci)).is_zero());
#endif
            return std::nullopt;
        }
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

}  // namespace jtsnf
