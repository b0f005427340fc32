#include "evenodd/verify.hpp"

#include "evenodd/algorithms.hpp"
#include "evenodd/entanglement.hpp"
#include "evenodd/nmr.hpp"
#include "evenodd/oracles.hpp"
#include "evenodd/query_complexity.hpp"
#include "evenodd/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace evenodd {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

class Recorder {
public:
    InvariantResult& begin(std::string name) {
        results_.push_back(InvariantResult{std::move(name), true, {}});
        return results_.back();
    }

    // Records a failure against the current invariant and, when given, a function.
    void fail(const std::string& what, const TruthTable* f = nullptr) {
        auto& cur = results_.back();
        cur.passed = false;
        cur.failures.push_back((f ? "f=" + f->to_string() + ": " : std::string{}) + what);
        if (f) bad_functions_.insert(f->index());
    }

    void expect(bool ok, const std::string& what, const TruthTable* f = nullptr) {
        if (!ok) fail(what, f);
    }

    void expect_near(double actual, double expected, double tol, const std::string& what,
                     const TruthTable* f = nullptr) {
        if (!(std::abs(actual - expected) <= tol)) {
            fail(what + ": expected " + num(expected) + ", got " + num(actual), f);
        }
    }

    std::vector<InvariantResult> take() { return std::move(results_); }
    int bad_function_count() const { return static_cast<int>(bad_functions_.size()); }

private:
    std::vector<InvariantResult> results_;
    std::set<unsigned> bad_functions_;
};

int sign_of(int bit) { return bit ? -1 : 1; }

// (-1)^{f(00) xor f(01)}
int first_pair_sign(const TruthTable& f) { return sign_of(f(0) ^ f(1)); }
int second_pair_sign(const TruthTable& f) { return sign_of(f(2) ^ f(3)); }

StateVector formula_final_state(const TruthTable& f) {
    const double p = first_pair_sign(f);
    const double q = second_pair_sign(f);
    const double k = 1.0 / (2.0 * std::numbers::sqrt2);
    return StateVector({(p + q) * k, 2.0 * k, (p - q) * k, 0.0});
}

Matrix eq5_density(Parity parity, double sign) {
    Matrix m(4);
    const std::size_t a = parity == Parity::Even ? 0 : 1;
    const std::size_t b = parity == Parity::Even ? 1 : 2;
    m(a, a) = 0.5;
    m(b, b) = 0.5;
    m(a, b) = 0.5 * sign;
    m(b, a) = 0.5 * sign;
    return m;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const auto& r) { return r.passed; });
}

std::string VerifyReport::summary() const {
    return std::to_string(functions_verified) + "/16 functions verified, classical_min_queries=" +
           std::to_string(classical_min_queries);
}

VerifyReport run_verification(const VerifyOptions& options) {
    const double tol = options.tolerance;
    const double tol_ent = std::max(1e-10, tol);
    const double tol_idem = std::max(1e-11, tol);
    const auto functions = enumerate_functions();

    struct Run {
        TruthTable f;
        FunctionClass cls;
        AlgorithmResult result;
    };
    std::vector<Run> runs;
    runs.reserve(functions.size());
    for (const auto& f : functions) runs.push_back(Run{f, classify(f), run_even_odd(f, options.hadamards)});

    Recorder rec;

    rec.begin("oracle_unitary_diagonal_self_inverse");
    for (const auto& f : functions) {
        const auto u = build_oracle(f);
        rec.expect(u.unitarity_defect() <= tol, "oracle not unitary", &f);
        rec.expect(u.entries().is_diagonal(tol), "oracle not diagonal", &f);
        rec.expect(max_abs_diff(u.entries() * u.entries(), Matrix::identity(4)) <= tol, "oracle not self-inverse",
                   &f);
    }

    rec.begin("class_histogram");
    {
        std::map<int, int> histogram;
        int even = 0;
        for (const auto& r : runs) {
            ++histogram[r.cls.ones];
            even += r.cls.parity == Parity::Even;
        }
        const std::map<int, int> expected{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}};
        for (const auto& [ones, count] : expected) {
            rec.expect(histogram[ones] == count, "class [" + std::to_string(ones) + "," + std::to_string(4 - ones) +
                                                     "]: expected " + std::to_string(count) + " functions, got " +
                                                     std::to_string(histogram[ones]));
        }
        rec.expect(even == 8, "expected 8 even functions, got " + std::to_string(even));
    }

    rec.begin("oracle_separable_iff_even");
    for (const auto& r : runs) {
        const bool separable = is_separable_oracle(build_oracle(r.f));
        rec.expect(separable == (r.cls.parity == Parity::Even),
                   std::string("expected ") + (r.cls.parity == Parity::Even ? "Separable" : "Entangling") +
                       ", got " + (separable ? "Separable" : "Entangling"),
                   &r.f);
    }

    rec.begin("even_odd_verdict_and_calls");
    for (const auto& r : runs) {
        rec.expect(r.result.verdict == r.cls.parity,
                   "expected verdict " + to_string(r.cls.parity) + ", got " + to_string(r.result.verdict), &r.f);
        rec.expect(r.result.oracle_calls == 2,
                   "expected 2 oracle calls, got " + std::to_string(r.result.oracle_calls), &r.f);
        rec.expect(r.result.per_step_states.size() == 6, "expected 6 per-step states", &r.f);
    }

    rec.begin("step_normalization");
    for (const auto& r : runs)
        for (std::size_t i = 0; i < r.result.per_step_states.size(); ++i)
            rec.expect_near(r.result.per_step_states[i].norm_squared(), 1.0, tol, "norm at step " + std::to_string(i),
                            &r.f);

    rec.begin("final_state_formula");
    for (const auto& r : runs) {
        const auto expected = formula_final_state(r.f);
        const auto aligned = align_phase(r.result.final_state, expected);
        const double diff = max_abs_diff(aligned, expected);
        rec.expect(diff <= tol,
                   "final state " + format_state(r.result.final_state) + " differs from " + format_state(expected) +
                       " by " + num(diff),
                   &r.f);
        // (+-|00> + |01>)/sqrt2 for even, (+-|10> + |01>)/sqrt2 for odd
        const double s = first_pair_sign(r.f) / std::numbers::sqrt2;
        const double h = 1.0 / std::numbers::sqrt2;
        const StateVector shape = r.cls.parity == Parity::Even ? StateVector({s, h, 0.0, 0.0})
                                                               : StateVector({0.0, h, s, 0.0});
        rec.expect(max_abs_diff(align_phase(r.result.final_state, shape), shape) <= tol,
                   "final state does not have the " + to_string(r.cls.parity) + " shape " + format_state(shape), &r.f);
    }

    rec.begin("non_orthogonal_finals");
    for (const auto& e : runs) {
        if (e.cls.parity != Parity::Even) continue;
        for (const auto& o : runs) {
            if (o.cls.parity != Parity::Odd || first_pair_sign(o.f) != first_pair_sign(e.f)) continue;
            rec.expect_near(std::abs(overlap(e.result.final_state, o.result.final_state)), 0.5, tol,
                            "|<even " + e.f.to_string() + "|odd " + o.f.to_string() + ">|");
        }
    }

    rec.begin("density_and_reduced_matrices");
    for (const auto& r : runs) {
        const double sign = first_pair_sign(r.f);
        const auto rho = density_from_state(align_phase(r.result.final_state, formula_final_state(r.f)));
        rec.expect(max_abs_diff(rho.entries(), eq5_density(r.cls.parity, sign)) <= tol,
                   "density matrix does not match the " + to_string(r.cls.parity) + " form", &r.f);
        const auto reduced = partial_trace(rho, 2);
        Matrix expected(2);
        expected(0, 0) = 0.5;
        expected(1, 1) = 0.5;
        if (r.cls.parity == Parity::Even) expected(0, 1) = expected(1, 0) = 0.5 * sign;
        rec.expect(max_abs_diff(reduced.entries(), expected) <= tol, "reduced state of qubit 2 mismatch", &r.f);
        const bool pure_expected = r.cls.parity == Parity::Even;
        rec.expect_near(purity(reduced), pure_expected ? 1.0 : 0.5, tol, "reduced purity q2", &r.f);
        rec.expect(is_idempotent(reduced) == pure_expected,
                   std::string("reduced q2 idempotent: expected ") + (pure_expected ? "true" : "false"), &r.f);
        rec.expect(max_abs_diff(rho.entries() * rho.entries(), rho.entries()) <= tol_idem,
                   "full density matrix not idempotent", &r.f);
    }

    rec.begin("entanglement_iff_odd");
    for (const auto& r : runs) {
        const auto ent = analyze_pure_state(r.result.final_state);
        const bool odd = r.cls.parity == Parity::Odd;
        rec.expect_near(ent.concurrence, odd ? 1.0 : 0.0, tol_ent, "concurrence", &r.f);
        rec.expect(ent.is_entangled == odd, std::string("is_entangled expected ") + (odd ? "true" : "false"), &r.f);
        rec.expect_near(ent.reduced_purity_q2, 1.0 - ent.concurrence * ent.concurrence / 2.0, tol_ent,
                        "purity = 1 - C^2/2", &r.f);
        rec.expect_near(ent.reduced_purity_q1, ent.reduced_purity_q2, tol_ent, "reduced purity symmetry", &r.f);
    }

    rec.begin("nmr_observability");
    double q1_even_lo = std::numeric_limits<double>::infinity(), q1_even_hi = -q1_even_lo;
    double q1_odd_lo = q1_even_lo, q1_odd_hi = q1_even_hi;
    for (const auto& r : runs) {
        const auto obs = observability(density_from_state(r.result.final_state));
        const bool even = r.cls.parity == Parity::Even;
        rec.expect(obs.observable_line == even,
                   std::string("observable_line expected ") + (even ? "true" : "false"), &r.f);
        rec.expect_near(obs.transverse_magnetization_q2, even ? 0.5 : 0.0, tol, "transverse magnetization q2", &r.f);
        auto& lo = even ? q1_even_lo : q1_odd_lo;
        auto& hi = even ? q1_even_hi : q1_odd_hi;
        lo = std::min(lo, obs.transverse_magnetization_q1);
        hi = std::max(hi, obs.transverse_magnetization_q1);
    }

    rec.begin("spin1_indistinguishability");
    {
        const bool separable = q1_even_hi + kObservabilityThreshold < q1_odd_lo ||
                               q1_odd_hi + kObservabilityThreshold < q1_even_lo;
        rec.expect(!separable, "qubit-1 transverse magnetization separates even from odd (even in [" +
                                   num(q1_even_lo) + "," + num(q1_even_hi) + "], odd in [" + num(q1_odd_lo) + "," +
                                   num(q1_odd_hi) + "])");
    }

    rec.begin("coherence_resum_and_symmetry");
    for (const auto& r : runs) {
        const auto rho = density_from_state(r.result.final_state);
        const auto parts = decompose_coherences(rho);
        rec.expect(max_abs_diff(parts.resum(), rho.entries()) <= tol, "coherence components do not re-sum", &r.f);
        for (int p = 1; p <= 2; ++p)
            rec.expect(max_abs_diff(parts.component(p), parts.component(-p).adjoint()) <= tol,
                       "component(+" + std::to_string(p) + ") != dagger(component(-" + std::to_string(p) + "))",
                       &r.f);
    }

    rec.begin("deutsch_jozsa_column");
    for (const auto& r : runs) {
        const auto dj = run_deutsch_jozsa_2bit(r.f, options.hadamards);
        const auto expected = dj_class(r.cls);
        const DjVerdict want = expected == DjClass::Constant   ? DjVerdict::Constant
                               : expected == DjClass::Balanced ? DjVerdict::Balanced
                                                               : DjVerdict::Neither;
        rec.expect(dj.verdict == want, "DJ verdict expected " + to_string(want) + ", got " + to_string(dj.verdict),
                   &r.f);
        rec.expect(dj.oracle_calls == 1, "DJ circuit must call the oracle once", &r.f);
    }

    rec.begin("query_separation");
    const int classical = classical_min_queries(parity_property());
    rec.expect(classical == 4, "classical_min_queries(parity): expected 4, got " + std::to_string(classical));
    {
        const auto promise = dj_promise_domain();
        const int dj = classical_min_queries(dj_property(), promise);
        rec.expect(dj == 3, "classical_min_queries(DJ promise): expected 3, got " + std::to_string(dj));
    }
    for (const auto& r : runs)
        rec.expect(r.result.oracle_calls < classical,
                   "quantum calls " + std::to_string(r.result.oracle_calls) + " not below classical " +
                       std::to_string(classical),
                   &r.f);

    VerifyReport report;
    report.functions_verified = 16 - rec.bad_function_count();
    report.classical_min_queries = classical;
    report.invariants = rec.take();
    return report;
}

std::string render_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const auto& inv : report.invariants) {
        os << (inv.passed ? "PASS " : "FAIL ") << inv.name << "\n";
        for (const auto& line : inv.failures) os << "     " << line << "\n";
    }
    os << report.summary() << "\n";
    return os.str();
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json invariants = nlohmann::json::array();
    for (const auto& inv : report.invariants) {
        invariants.push_back({{"name", inv.name}, {"passed", inv.passed}, {"failures", inv.failures}});
    }
    return {{"passed", report.passed()},
            {"functions_verified", report.functions_verified},
            {"classical_min_queries", report.classical_min_queries},
            {"summary", report.summary()},
            {"invariants", std::move(invariants)}};
}

}  // namespace evenodd
