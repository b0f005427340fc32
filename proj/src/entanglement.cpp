#include "evenodd/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evenodd {

namespace {
constexpr double kIdempotencyTolerance = 1e-11;
}

EntanglementReport analyze_pure_state(const StateVector& s) {
    if (s.num_qubits() != 2) {
        throw std::invalid_argument("analyze_pure_state: expected 2 qubits, got " + std::to_string(s.num_qubits()));
    }
    // Amplitude matrix M = [[a, b], [c, d]]; its singular values are the
    // Schmidt coefficients. With sigma1^2 + sigma2^2 = |M|_F^2 and
    // sigma1 * sigma2 = |det M| they follow in closed form.
    const Complex a = s[0], b = s[1], c = s[2], d = s[3];
    const double det = std::abs(a * d - b * c);
    const double frob = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    const double disc = std::sqrt(std::max(0.0, frob * frob - 4.0 * det * det));
    const double big = std::sqrt(std::max(0.0, (frob + disc) / 2.0));
    // Dividing by the larger root avoids the cancellation in (frob - disc).
    const double small = big > 0.0 ? det / big : 0.0;

    EntanglementReport report;
    report.concurrence = std::min(1.0, 2.0 * det);
    report.schmidt_coefficients = {big, small};
    report.is_entangled = report.concurrence > kEntanglementThreshold;

    const DensityMatrix rho = density_from_state(s);
    report.reduced_purity_q1 = purity(partial_trace(rho, 1));
    report.reduced_purity_q2 = purity(partial_trace(rho, 2));
    return report;
}

bool is_idempotent(const DensityMatrix& rho) {
    return max_abs_diff(rho.entries() * rho.entries(), rho.entries()) <= kIdempotencyTolerance;
}

}  // namespace evenodd
