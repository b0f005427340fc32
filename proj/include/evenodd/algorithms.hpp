// algorithms.hpp
// The two-call even/odd classification circuit and the one-call two-bit
// Deutsch-Jozsa circuit, both on phase oracles without an ancilla.

#pragma once

#include "evenodd/gates.hpp"
#include "evenodd/oracles.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace evenodd {

// Labels of the five gates applied by run_even_odd, in order.
inline constexpr std::array<std::string_view, 5> kEvenOddGateLabels{"H12", "Uf", "H2", "Uf", "H12"};

struct AlgorithmResult {
    StateVector final_state;
    Parity verdict;
    int oracle_calls;
    // Initial |00> followed by the state after each gate (6 entries).
    std::vector<StateVector> per_step_states;
};

// H12 . Uf . H2 . Uf . H12 |00>. The verdict is Odd when |10> carries an
// amplitude of magnitude above 0.5, Even when |00> does.
AlgorithmResult run_even_odd(const TruthTable& f,
                             const gates::HadamardSet& hadamards = gates::standard_hadamards());

enum class DjVerdict { Constant, Balanced, Neither };

struct DjResult {
    StateVector final_state;
    DjVerdict verdict;
    int oracle_calls;
};

// H12 . Uf . H12 |00>.
DjResult run_deutsch_jozsa_2bit(const TruthTable& f,
                                const gates::HadamardSet& hadamards = gates::standard_hadamards());

std::string to_string(DjVerdict v);

}  // namespace evenodd
