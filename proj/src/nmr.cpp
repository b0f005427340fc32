#include "evenodd/nmr.hpp"

#include "evenodd/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace evenodd {

int coherence_order(std::size_t row, std::size_t col) {
    return std::popcount(col) - std::popcount(row);
}

double CoherenceDecomposition::weight(int order) const {
    double sum = 0.0;
    for (const auto& z : component(order).data()) sum += std::abs(z);
    return sum;
}

Matrix CoherenceDecomposition::resum() const {
    Matrix total(orders.begin()->second.dim());
    for (const auto& [order, part] : orders) total = total + part;
    return total;
}

CoherenceDecomposition decompose_coherences(const Matrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("decompose_coherences: expected a 4x4 matrix, got " + std::to_string(rho.dim()));
    }
    CoherenceDecomposition out;
    for (int p = -2; p <= 2; ++p) out.orders.emplace(p, Matrix(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out.orders.at(coherence_order(r, c))(r, c) = rho(r, c);
    return out;
}

CoherenceDecomposition decompose_coherences(const DensityMatrix& rho) {
    return decompose_coherences(rho.entries());
}

double transverse_magnetization(const DensityMatrix& rho, int qubit) {
    return std::abs(partial_trace(rho, qubit)(0, 1));
}

ObservabilityReport observability(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) {
        throw std::invalid_argument("observability: expected a two-qubit density matrix");
    }
    const auto parts = decompose_coherences(rho);
    ObservabilityReport report;
    report.single_quantum_weight = parts.weight(1) + parts.weight(-1);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c && coherence_order(r, c) == 0) report.zero_quantum_weight += std::abs(rho(r, c));
    report.observable_line = report.single_quantum_weight > kObservabilityThreshold;
    report.transverse_magnetization_q1 = transverse_magnetization(rho, 1);
    report.transverse_magnetization_q2 = transverse_magnetization(rho, 2);
    return report;
}

namespace {

struct FamilyRange {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

template <typename Visit>
void for_each_final(Visit&& visit) {
    for (const auto& f : enumerate_functions()) {
        const auto result = run_even_odd(f);
        visit(classify(f).parity, density_from_state(result.final_state));
    }
}

}  // namespace

bool threshold_separates(const ReadoutObservable& observable) {
    FamilyRange even, odd;
    for_each_final([&](Parity p, const DensityMatrix& rho) {
        (p == Parity::Even ? even : odd).add(observable(rho));
    });
    return even.hi + kObservabilityThreshold < odd.lo || odd.hi + kObservabilityThreshold < even.lo;
}

bool threshold_classifies(const ReadoutObservable& observable, double threshold) {
    bool ok = true;
    for_each_final([&](Parity p, const DensityMatrix& rho) {
        ok = ok && ((observable(rho) > threshold) == (p == Parity::Even));
    });
    return ok;
}

bool spin1_indistinguishability_check() {
    return !threshold_separates([](const DensityMatrix& rho) { return transverse_magnetization(rho, 1); });
}

}  // namespace evenodd
