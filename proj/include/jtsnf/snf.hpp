#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jtsnf/matrix.hpp"
#include "jtsnf/unipoly.hpp"

namespace jtsnf {

template <Field F>
using RingMatrix = Matrix<UniPoly<F>>;

// P * M * Q = diag(diagonal), with P and Q unimodular (constant nonzero
// determinant) and diagonal[i] | diagonal[i+1]; nonzero entries are monic and
// the units divided out at the end are collected in units_absorbed.
template <Field F>
struct SnfResult {
    std::vector<UniPoly<F>> diagonal;
    RingMatrix<F> left;
    RingMatrix<F> right;
    F units_absorbed = F(1);
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Every intermediate entry is a minor of the input, so the divisions are exact.
template <Field F>
UniPoly<F> det(RingMatrix<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return UniPoly<F>::constant(F(1));
    bool negate = false;
    UniPoly<F> prev = UniPoly<F>::constant(F(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return UniPoly<F>();
            a.swap_rows(k, piv);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                UniPoly<F> t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto [q, r] = divrem(t, prev);
                if (!r.is_zero())
                    throw std::logic_error("fraction-free elimination: inexact division");
                a.at(i, j) = std::move(q);
            }
        prev = a.at(k, k);
    }
    UniPoly<F> d = a.at(n - 1, n - 1);
    return negate ? -d : d;
}

namespace detail {

// Unit content of a row over Q: gcd of numerators / lcm of denominators.
// Dividing a row by it keeps the integer coefficients small during
// elimination; over Q(q) we skip the normalization.
inline Rational row_unit_content(const std::vector<const UniPoly<Rational>*>& row) {
    BigInt g(0), l(1);
    for (const auto* p : row)
        for (const auto& c : p->coeffs()) {
            g = ::gcd(g, BigInt(c.get_num()));
            l = ::lcm(l, BigInt(c.get_den()));
        }
    if (sgn(g) == 0) return Rational(1);
    return make_rational(g, l);
}

template <Field F>
F row_unit_content(const std::vector<const UniPoly<F>*>&) {
    return F(1);
}

template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// Smith normal form by Euclidean elimination. Pivot: nonzero entry of
// minimal degree (ties by row, then column). The pivot row/column are
// reduced by Euclidean division; a nonzero remainder is swapped into the
// pivot and the loop repeats, so the pivot degree strictly decreases.
// Once isolated, any remaining entry the pivot does not divide is pulled
// into the pivot row and re-eliminated, which enforces the divisibility
// chain. Transforms P, Q are maintained throughout; diagonal entries are
// made monic at the very end.
template <Field F>
SnfResult<F> snf_reduce(const RingMatrix<F>& m) {
    const int rows = m.rows(), cols = m.cols();
    RingMatrix<F> a = m;
    SnfResult<F> res;
    res.left = RingMatrix<F>::identity(rows, UniPoly<F>::constant(F(1)));
    res.right = RingMatrix<F>::identity(cols, UniPoly<F>::constant(F(1)));
    RingMatrix<F>&p = res.left, &q = res.right;

    auto row_axpy = [&](int dst, int src, const UniPoly<F>& f) {
        for (int j = 0; j < cols; ++j) a.at(dst, j) = a.at(dst, j) + f * a.at(src, j);
        for (int j = 0; j < rows; ++j) p.at(dst, j) = p.at(dst, j) + f * p.at(src, j);
    };
    auto col_axpy = [&](int dst, int src, const UniPoly<F>& f) {
        for (int i = 0; i < rows; ++i) a.at(i, dst) = a.at(i, dst) + f * a.at(i, src);
        for (int i = 0; i < cols; ++i) q.at(i, dst) = q.at(i, dst) + f * q.at(i, src);
    };
    auto row_scale = [&](int i, const F& u) {  // multiply row by 1/u
        F inv = F(1) / u;
        for (int j = 0; j < cols; ++j) a.at(i, j) = a.at(i, j) * inv;
        for (int j = 0; j < rows; ++j) p.at(i, j) = p.at(i, j) * inv;
    };

    const int steps = std::min(rows, cols);
    for (int piv = 0; piv < steps; ++piv) {
        // minimal-degree pivot in the trailing block
        int bi = -1, bj = -1, bdeg = -1;
        for (int i = piv; i < rows; ++i)
            for (int j = piv; j < cols; ++j) {
                const auto& e = a.at(i, j);
                if (e.is_zero()) continue;
                if (bdeg < 0 || e.degree() < bdeg) {
                    bi = i;
                    bj = j;
                    bdeg = e.degree();
                }
            }
        if (bi < 0) break;  // trailing block is zero
        a.swap_rows(piv, bi);
        p.swap_rows(piv, bi);
        a.swap_cols(piv, bj);
        q.swap_cols(piv, bj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = piv + 1; i < rows && settled; ++i) {
                if (a.at(i, piv).is_zero()) continue;
                auto [qt, rem] = divrem(a.at(i, piv), a.at(piv, piv));
                row_axpy(i, piv, -qt);
                if (!a.at(i, piv).is_zero()) {  // remainder: smaller-degree pivot found
                    a.swap_rows(piv, i);
                    p.swap_rows(piv, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (int j = piv + 1; j < cols && settled; ++j) {
                if (a.at(piv, j).is_zero()) continue;
                auto [qt, rem] = divrem(a.at(piv, j), a.at(piv, piv));
                col_axpy(j, piv, -qt);
                if (!a.at(piv, j).is_zero()) {
                    a.swap_cols(piv, j);
                    q.swap_cols(piv, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot isolated; force it to divide everything left
            for (int i = piv + 1; i < rows && settled; ++i)
                for (int j = piv + 1; j < cols && settled; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (divrem(a.at(i, j), a.at(piv, piv)).second.is_zero()) continue;
                    row_axpy(piv, i, UniPoly<F>::constant(F(1)));
                    settled = false;
                }
        }

        // keep coefficients small in the untouched block (unit scaling, in P)
        for (int i = piv + 1; i < rows; ++i) {
            std::vector<const UniPoly<F>*> row;
            for (int j = piv + 1; j < cols; ++j) row.push_back(&a.at(i, j));
            F u = detail::row_unit_content(row);
            if (!is_one(u)) row_scale(i, u);
        }
    }

    res.diagonal.resize(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) res.diagonal[static_cast<size_t>(i)] = a.at(i, i);
    for (int i = 0; i < steps; ++i) {
        UniPoly<F>& d = res.diagonal[static_cast<size_t>(i)];
        if (d.is_zero() || is_one(d.lc())) continue;
        F u = d.lc();
        row_scale(i, u);
        d = a.at(i, i);
        res.units_absorbed = res.units_absorbed * u;
    }
    return res;
}

// Monic gcd of all k x k minors; zero if they all vanish. Subsets are walked
// in lexicographic order and the fold stops as soon as the gcd drops to a
// unit, which happens early whenever some minor is constant.
template <Field F>
UniPoly<F> gcd_of_k_minors(const RingMatrix<F>& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor order out of range");
    UniPoly<F> g;
    bool unit = false;
    detail::for_each_combination(m.rows(), k, [&](const std::vector<int>& ri) {
        if (unit) return;
        detail::for_each_combination(m.cols(), k, [&](const std::vector<int>& ci) {
            if (unit) return;
            UniPoly<F> d = det(m.submatrix(ri, ci));
            if (d.is_zero()) return;
            g = g.is_zero() ? monic(d) : poly_gcd(g, d);
            if (g.degree() == 0) unit = true;
        });
    });
    if (unit) return UniPoly<F>::constant(F(1));
    return g;
}

// Diagonal via the minor-gcd characterization: the k-th entry is the ratio of
// consecutive minor gcds. Independent of snf_reduce; exponential in k, meant
// for matrices up to ~6x6.
template <Field F>
std::vector<UniPoly<F>> snf_via_minors(const RingMatrix<F>& m) {
    const int steps = std::min(m.rows(), m.cols());
    std::vector<UniPoly<F>> out;
    out.reserve(static_cast<size_t>(steps));
    UniPoly<F> prev = UniPoly<F>::constant(F(1));
    for (int k = 1; k <= steps; ++k) {
        UniPoly<F> g = gcd_of_k_minors(m, k);
        if (g.is_zero()) {
            for (int i = k; i <= steps; ++i) out.emplace_back();
            break;
        }
        auto [quot, rem] = divrem(g, prev);
        if (!rem.is_zero()) throw std::logic_error("minor gcd chain violated");
        out.push_back(monic(quot));
        prev = std::move(g);
    }
    return out;
}

}  // namespace jtsnf
