#include "jtsnf/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

namespace jtsnf {

namespace {

PolyN n_factor(int content) { return PolyN('n', {Rational(content), Rational(1)}); }

PolyY qy_factor(int content) {
    return PolyY('y', {RatFuncQ(1), -RatFuncQ::q_power(content)});
}

PolyY qbracket_factor(int content) { return PolyY('y', {bracket(content), RatFuncQ(1)}); }

std::string n_factor_str(int c) {
    if (c == 0) return "n";
    std::ostringstream os;
    os << "(n " << (c > 0 ? '+' : '-') << ' ' << std::abs(c) << ')';
    return os.str();
}

std::string qy_factor_str(int c) {
    std::ostringstream os;
    os << "(1 - ";
    if (c != 0) {
        os << 'q';
        if (c != 1) os << '^' << c;
        os << '*';
    }
    os << "y)";
    return os.str();
}

std::string qbracket_factor_str(int c) {
    if (c == 0) return "y";
    RatFuncQ b = bracket(c);
    if (field_is_negative(b)) return "(y - " + (-b).str() + ")";
    return "(y + " + b.str() + ")";
}

template <Field F, class FactorFn, class StrFn>
PredictedDiagonal<F> predict_impl(const Partition& lambda, int t, SpecializationKind kind,
                                  FactorFn&& factor, StrFn&& factor_str) {
    if (t < lambda.length()) throw std::invalid_argument("t below length");
    PredictedDiagonal<F> pred;
    pred.kind = kind;
    pred.entries.reserve(static_cast<size_t>(t));
    pred.factored.reserve(static_cast<size_t>(t));
    for (int i = 1; i <= t; ++i) {
        DiagonalHook hook = diagonal_hook(lambda, t - i + 1);
        UniPoly<F> prod = UniPoly<F>::constant(F(1));
        std::string text;
        for (int c : hook.contents()) {
            prod = prod * factor(c);
            text += factor_str(c);
        }
        if (hook.empty()) text = "1";
        pred.entries.push_back(std::move(prod));
        pred.factored.push_back(std::move(text));
    }
    return pred;
}

}  // namespace

PredictedDiagonal<Rational> predict_n(const Partition& lambda, int t) {
    return predict_impl<Rational>(lambda, t, SpecializationKind::NPoly, n_factor, n_factor_str);
}

PredictedDiagonal<RatFuncQ> predict_q(const Partition& lambda, int t, SpecializationKind kind) {
    if (kind == SpecializationKind::QyPoly)
        return predict_impl<RatFuncQ>(lambda, t, kind, qy_factor, qy_factor_str);
    if (kind == SpecializationKind::QBracket)
        return predict_impl<RatFuncQ>(lambda, t, kind, qbracket_factor, qbracket_factor_str);
    throw std::invalid_argument("predict_q expects a q-specialization");
}

const char* method_name(SnfMethod m) {
    switch (m) {
        case SnfMethod::Reduce: return "reduce";
        case SnfMethod::Minors: return "minors";
        case SnfMethod::Both: return "both";
    }
    return "?";
}

std::optional<SnfMethod> method_parse(const std::string& name) {
    if (name == "reduce") return SnfMethod::Reduce;
    if (name == "minors") return SnfMethod::Minors;
    if (name == "both") return SnfMethod::Both;
    return std::nullopt;
}

namespace {

template <Field F>
void run_case(const RingMatrix<F>& m, const PredictedDiagonal<F>& pred,
              VerificationReport& rep) {
    std::vector<UniPoly<F>> expect;
    expect.reserve(pred.entries.size());
    for (const auto& e : pred.entries) expect.push_back(monic(e));

    std::vector<UniPoly<F>> main_diag;
    bool ok = true;
    if (rep.method == SnfMethod::Reduce || rep.method == SnfMethod::Both) {
        main_diag = snf_reduce(m).diagonal;
        ok = ok && main_diag == expect;
    }
    if (rep.method == SnfMethod::Minors || rep.method == SnfMethod::Both) {
        std::vector<UniPoly<F>> alt = snf_via_minors(m);
        ok = ok && alt == expect;
        if (rep.method == SnfMethod::Both)
            ok = ok && alt == main_diag;
        else
            main_diag = std::move(alt);
    }
    rep.match = ok;
    rep.predicted = pred.factored;
    rep.computed.clear();
    for (const auto& d : main_diag) rep.computed.push_back(d.str());
}

}  // namespace

VerificationReport verify(const Partition& lambda, int t, SpecializationKind kind,
                          SnfMethod method) {
    VerificationReport rep;
    rep.shape = lambda;
    rep.t = t;
    rep.kind = kind;
    rep.method = method;
    auto start = std::chrono::steady_clock::now();
    if (kind == SpecializationKind::NPoly) {
        run_case(build_jt_n(lambda, t).entries, predict_n(lambda, t), rep);
    } else {
        run_case(build_jt_q(lambda, t, kind).entries, predict_q(lambda, t, kind), rep);
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

HookContentResult hook_content_check(const Partition& lambda, int t) {
    HookContentResult res;
    PolyN d = det(build_jt_n(lambda, t).entries);
    PolyN full = PolyN::constant(Rational(1));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) full = full * n_factor(j - i);
    auto [quot, rem] = divrem(d, full);
    res.ok = rem.is_zero() && quot.degree() == 0 && sgn(quot.coeff(0)) > 0;
    if (res.ok) res.constant = quot.coeff(0);
    return res;
}

namespace {

std::vector<int> iota_range(int from, int count) {
    std::vector<int> v(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<size_t>(i)] = from + i;
    return v;
}

RingMatrix<Rational> corner_block(const JTMatrix<Rational>& jt, int k) {
    // last k rows, first k columns (0-based selections)
    return jt.entries.submatrix(iota_range(jt.size - k, k), iota_range(0, k));
}

}  // namespace

bool claim_c1_check(const Partition& lambda, int t, int k) {
    if (k < 1 || k > t) throw std::invalid_argument("k out of range");
    JTMatrix<Rational> jt = build_jt_n(lambda, t);
    PolyN dmk = det(corner_block(jt, k));
    if (dmk.is_zero()) {
        // each selected row must start 0,...,0,1; pick the column of its 1
        std::vector<int> ri, ci;
        for (int i = t - k + 1; i <= t; ++i) {
            if (lambda.part(i) >= i) return false;  // no leading 1 in this row
            ri.push_back(i - 1);
            ci.push_back(i - lambda.part(i) - 1);
        }
        PolyN one = det(jt.entries.submatrix(ri, ci));
        return one.is_one();
    }
    PredictedDiagonal<Rational> pred = predict_n(lambda, t);
    PolyN expected = PolyN::constant(Rational(1));
    for (int i = 0; i < k; ++i) expected = expected * pred.entries[static_cast<size_t>(i)];
    return monic(dmk) == monic(expected);
}

bool claim_c2_check(const Partition& lambda, int t, int k, long samples, unsigned long seed) {
    if (k < 1 || k > t) throw std::invalid_argument("k out of range");
    JTMatrix<Rational> jt = build_jt_n(lambda, t);
    PolyN dmk = det(corner_block(jt, k));
    if (dmk.is_zero()) return true;  // vacuous

    auto divisible = [&](const std::vector<int>& ri, const std::vector<int>& ci) {
        PolyN minor_det = det(jt.entries.submatrix(ri, ci));
        return minor_det.is_zero() || divrem(minor_det, dmk).second.is_zero();
    };

    if (samples <= 0) {
        bool ok = true;
        detail::for_each_combination(t, k, [&](const std::vector<int>& ri) {
            if (!ok) return;
            detail::for_each_combination(t, k, [&](const std::vector<int>& ci) {
                if (ok && !divisible(ri, ci)) ok = false;
            });
        });
        return ok;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> all = iota_range(0, t);
    for (long s = 0; s < samples; ++s) {
        std::vector<int> ri, ci;
        std::sample(all.begin(), all.end(), std::back_inserter(ri), k, rng);
        std::sample(all.begin(), all.end(), std::back_inserter(ci), k, rng);
        if (!divisible(ri, ci)) return false;
    }
    return true;
}

SweepReport sweep(int max_weight, int extra_rows, const std::vector<SpecializationKind>& kinds,
                  SnfMethod method) {
    SweepReport rep;
    for (const Partition& lambda : partitions_up_to(max_weight)) {
        for (int t = lambda.length(); t <= lambda.length() + extra_rows; ++t) {
            for (SpecializationKind kind : kinds) {
                VerificationReport r = verify(lambda, t, kind, method);
                ++rep.cases;
                rep.total_ms += r.ms;
                if (!r.match) rep.failures.push_back(std::move(r));
            }
        }
    }
    return rep;
}

nlohmann::json report_json(const VerificationReport& rep) {
    return nlohmann::json{{"shape", rep.shape.str()},    {"t", rep.t},
                          {"kind", kind_name(rep.kind)}, {"predicted", rep.predicted},
                          {"computed", rep.computed},    {"match", rep.match},
                          {"ms", rep.ms}};
}

nlohmann::json sweep_json(const SweepReport& rep) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : rep.failures) failures.push_back(report_json(f));
    return nlohmann::json{
        {"cases", rep.cases}, {"failures", failures}, {"total_ms", rep.total_ms}};
}

}  // namespace jtsnf
