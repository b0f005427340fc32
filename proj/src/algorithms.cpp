#include "evenodd/algorithms.hpp"

#include <cmath>
#include <stdexcept>

namespace evenodd {

namespace {

constexpr double kVerdictThreshold = 0.5;

// Wraps an oracle so every application is counted.
class CountingOracle {
public:
    explicit CountingOracle(const TruthTable& f) : unitary_(build_oracle(f)) {}

    StateVector operator()(const StateVector& s) {
        ++calls_;
        return apply(unitary_, s);
    }

    int calls() const noexcept { return calls_; }

private:
    UnitaryOperator unitary_;
    int calls_ = 0;
};

}  // namespace

AlgorithmResult run_even_odd(const TruthTable& f, const gates::HadamardSet& hadamards) {
    CountingOracle oracle(f);
    std::vector<StateVector> steps;
    steps.reserve(6);
    steps.push_back(StateVector::basis(2, 0));
    steps.push_back(apply(hadamards.both, steps.back()));
    steps.push_back(oracle(steps.back()));
    steps.push_back(apply(hadamards.second, steps.back()));
    steps.push_back(oracle(steps.back()));
    steps.push_back(apply(hadamards.both, steps.back()));

    const StateVector& out = steps.back();
    // Exact outcomes put 1/sqrt2 on exactly one of |00>, |10> and 0 on the other.
    const Parity verdict = std::abs(out[0b10]) > kVerdictThreshold ? Parity::Odd : Parity::Even;

    return AlgorithmResult{out, verdict, oracle.calls(), std::move(steps)};
}

DjResult run_deutsch_jozsa_2bit(const TruthTable& f, const gates::HadamardSet& hadamards) {
    CountingOracle oracle(f);
    StateVector s = apply(hadamards.both, StateVector::basis(2, 0));
    s = oracle(s);
    s = apply(hadamards.both, s);

    const double amp00 = std::abs(s[0]);
    DjVerdict verdict = DjVerdict::Neither;
    if (std::abs(amp00 - 1.0) <= kTolerance) {
        verdict = DjVerdict::Constant;
    } else if (amp00 <= kTolerance && classify(f).ones == 2) {
        verdict = DjVerdict::Balanced;
    }
    return DjResult{std::move(s), verdict, oracle.calls()};
}

std::string to_string(DjVerdict v) {
    switch (v) {
        case DjVerdict::Constant: return "Constant";
        case DjVerdict::Balanced: return "Balanced";
        case DjVerdict::Neither: break;
    }
    return "Neither";
}

}  // namespace evenodd
