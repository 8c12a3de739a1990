#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jtsnf/partitions.hpp"
#include "jtsnf/snf.hpp"
#include "jtsnf/unipoly.hpp"

namespace jtsnf {

// Which specialization the matrix entries live in:
//   NPoly    - x_1..x_n = 1, entries in Q[n]
//   QyPoly   - x_i = q^(i-1) with q^n = y, entries in Q(q)[y]
//   QBracket - the q-integer form f(k) of the same matrices, entries in Q(q)[y]
enum class SpecializationKind { NPoly, QyPoly, QBracket };

const char* kind_name(SpecializationKind kind);
std::optional<SpecializationKind> kind_parse(const std::string& name);

// h_i(1^n) = binom(n+i-1, i) as a polynomial in n; 1 at i = 0, 0 for i < 0.
PolyN phi_h(int i);

// h_i(1, q, ..., q^(n-1)) with q^n = y:
// prod_{j=0}^{i-1} (1 - q^j y) / prod_{j=1}^{i} (1 - q^j), degree i in y.
PolyY q_h(int i);

// The q-integer (k) = (1 - q^k)/(1 - q), defined for every integer k.
RatFuncQ bracket(int k);

// f(k) = y (y + (1)) ... (y + (k-1)) / ((1)(2)...(k)); 1 at k = 0, 0 for k < 0.
PolyY f_bracket(int k);

template <Field F>
struct JTMatrix {
    Partition shape;
    int size = 0;  // t
    SpecializationKind kind = SpecializationKind::NPoly;
    RingMatrix<F> entries;  // entry (i,j) = image of h_{lambda_i + j - i}
};

JTMatrix<Rational> build_jt_n(const Partition& lambda, int t);
JTMatrix<RatFuncQ> build_jt_q(const Partition& lambda, int t, SpecializationKind kind);

// The skew shape whose Jacobi-Trudi matrix is the given submatrix (1-based,
// strictly increasing row/column index sets). Returns nullopt when the forced
// shape degenerates, which is exactly when the minor vanishes identically.
std::optional<SkewShape> submatrix_to_skew(const Partition& lambda, int t,
                                           const std::vector<int>& rows,
                                           const std::vector<int>& cols);

}  // namespace jtsnf
