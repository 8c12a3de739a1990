#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jtsnf/jacobitrudi.hpp"

namespace jtsnf {

// Closed-form SNF diagonal read off the diagonal hooks: entry i is the
// product over the cells u of D_{t-i+1} of the kind's linear factor,
//   (n + c(u))        over Q[n],
//   (1 - q^c(u) y)    over Q(q)[y],
//   (y + (c(u)))      in the q-integer form,
// with the empty product equal to 1.
template <Field F>
struct PredictedDiagonal {
    SpecializationKind kind = SpecializationKind::NPoly;
    std::vector<UniPoly<F>> entries;     // literal factor products, index 0 = alpha_1
    std::vector<std::string> factored;   // display form, e.g. "(n - 1)n(n + 1)"
};

PredictedDiagonal<Rational> predict_n(const Partition& lambda, int t);
PredictedDiagonal<RatFuncQ> predict_q(const Partition& lambda, int t, SpecializationKind kind);

enum class SnfMethod { Reduce, Minors, Both };
const char* method_name(SnfMethod m);
std::optional<SnfMethod> method_parse(const std::string& name);

struct VerificationReport {
    Partition shape;
    int t = 0;
    SpecializationKind kind = SpecializationKind::NPoly;
    SnfMethod method = SnfMethod::Reduce;
    std::vector<std::string> predicted;  // factored form
    std::vector<std::string> computed;   // expanded monic form
    bool match = false;
    double ms = 0.0;
};

// Build the specialized matrix, run the requested SNF method(s), and compare
// monic diagonals against the prediction. With Both, the two methods must
// also agree with each other.
VerificationReport verify(const Partition& lambda, int t, SpecializationKind kind,
                          SnfMethod method);

// det(JT) divided by prod_{u in lambda} (n + c(u)) must be a positive
// constant (the reciprocal of the hook-length product).
struct HookContentResult {
    Rational constant;
    bool ok = false;
};
HookContentResult hook_content_check(const Partition& lambda, int t);

// M_k = last k rows, first k columns. If det M_k = 0, a unitriangular k x k
// minor built from the leading 1 of each of those rows must have determinant
// exactly 1; otherwise monic(det M_k) must equal the product of the first k
// predicted diagonal entries.
bool claim_c1_check(const Partition& lambda, int t, int k);

// Every k x k minor is divisible by det M_k (vacuous when det M_k = 0).
// samples <= 0 checks every index pair, otherwise that many random pairs.
bool claim_c2_check(const Partition& lambda, int t, int k, long samples,
                    unsigned long seed = 20260809UL);

struct SweepReport {
    long cases = 0;
    std::vector<VerificationReport> failures;
    double total_ms = 0.0;
};

// verify() for every nonempty partition of weight <= max_weight, every
// t in {len(lambda), ..., len(lambda)+extra_rows} and every listed kind.
// Iteration order is deterministic: weights ascending, reverse-lex within
// a weight. Failures are collected, never thrown.
SweepReport sweep(int max_weight, int extra_rows, const std::vector<SpecializationKind>& kinds,
                  SnfMethod method = SnfMethod::Reduce);

nlohmann::json report_json(const VerificationReport& rep);
nlohmann::json sweep_json(const SweepReport& rep);

}  // namespace jtsnf
