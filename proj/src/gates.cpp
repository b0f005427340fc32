#include "evenodd/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evenodd::gates {

UnitaryOperator hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return UnitaryOperator(Matrix(2, {s, s, s, -s}));
}

UnitaryOperator identity() { return UnitaryOperator::identity(1); }

UnitaryOperator pauli_x() { return UnitaryOperator(Matrix(2, {0.0, 1.0, 1.0, 0.0})); }

UnitaryOperator pauli_z() { return UnitaryOperator(Matrix(2, {1.0, 0.0, 0.0, -1.0})); }

UnitaryOperator u3(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex i{0.0, 1.0};
    return UnitaryOperator(Matrix(2, {c, -std::exp(i * lambda) * s, std::exp(i * phi) * s,
                                      std::exp(i * (phi + lambda)) * c}));
}

HadamardSet HadamardSet::from(const UnitaryOperator& h) {
    if (h.num_qubits() != 1) throw std::invalid_argument("HadamardSet: expected a single-qubit gate");
    const auto id = identity();
    return HadamardSet{tensor_product(h, id), tensor_product(id, h), tensor_product(h, h)};
}

const HadamardSet& standard_hadamards() {
    static const HadamardSet set = HadamardSet::from(hadamard());
    return set;
}

}  // namespace evenodd::gates
