// nmr.hpp
// Coherence-order bookkeeping for two-spin density matrices and the
// resulting prediction of whether a spectral line is observable.
//
// Spin-up (bit 0) carries m = +1/2. The element |i><j| has coherence order
// m(i) - m(j), which for bit strings is popcount(j) - popcount(i).

#pragma once

#include "evenodd/quantum_core.hpp"

#include <functional>
#include <map>

namespace evenodd {

inline constexpr double kObservabilityThreshold = 1e-10;

int coherence_order(std::size_t row, std::size_t col);

struct CoherenceDecomposition {
    // Orders -2..+2, each present; entries not of that order are zero.
    std::map<int, Matrix> orders;

    const Matrix& component(int order) const { return orders.at(order); }
    // Sum of |entries| in the given order component.
    double weight(int order) const;
    // Sum of all components.
    Matrix resum() const;
};

struct ObservabilityReport {
    bool observable_line = false;
    double single_quantum_weight = 0.0;  // sum |rho_ij| over |order| = 1
    double zero_quantum_weight = 0.0;    // sum |rho_ij| over order 0, i != j
    double transverse_magnetization_q1 = 0.0;
    double transverse_magnetization_q2 = 0.0;
};

// Both throw std::invalid_argument unless rho is a two-qubit matrix.
CoherenceDecomposition decompose_coherences(const Matrix& rho);
CoherenceDecomposition decompose_coherences(const DensityMatrix& rho);
ObservabilityReport observability(const DensityMatrix& rho);

// |<0|rho_k|1>| for the reduced state of qubit k.
double transverse_magnetization(const DensityMatrix& rho, int qubit);

// A scalar read off the final density matrix of the even/odd circuit.
using ReadoutObservable = std::function<double(const DensityMatrix&)>;

// True iff the value sets of the even and odd families are disjoint
// intervals, i.e. some threshold separates all 16 functions.
bool threshold_separates(const ReadoutObservable& observable);

// True iff "value > threshold" holds exactly for the even functions.
bool threshold_classifies(const ReadoutObservable& observable, double threshold);

// True iff no threshold on qubit 1's transverse magnetization tells the
// even functions from the odd ones.
bool spin1_indistinguishability_check();

}  // namespace evenodd
