// entanglement.hpp
// Pure two-qubit entanglement: concurrence, Schmidt coefficients and the
// mixedness of the reduced states.

#pragma once

#include "evenodd/quantum_core.hpp"

#include <array>

namespace evenodd {

// Concurrence above this counts as entangled.
inline constexpr double kEntanglementThreshold = 1e-10;

struct EntanglementReport {
    double concurrence = 0.0;
    std::array<double, 2> schmidt_coefficients{1.0, 0.0};  // descending
    bool is_entangled = false;
    double reduced_purity_q1 = 1.0;
    double reduced_purity_q2 = 1.0;
};

// Requires a two-qubit state; throws std::invalid_argument otherwise.
EntanglementReport analyze_pure_state(const StateVector& s);

// rho^2 = rho entrywise within 1e-11.
bool is_idempotent(const DensityMatrix& rho);

}  // namespace evenodd
