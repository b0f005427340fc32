// Randomized invariants over gate sequences, states and operators.

#include "evenodd/entanglement.hpp"
#include "evenodd/gates.hpp"
#include "evenodd/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace evenodd;

namespace {

class Sampler {
public:
    explicit Sampler(std::uint32_t seed) : rng_(seed) {}

    double angle() { return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng_); }
    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    UnitaryOperator single_qubit() { return gates::u3(angle(), angle(), angle()); }

    StateVector state(int num_qubits) {
        std::normal_distribution<double> g;
        std::vector<Complex> amps(std::size_t{1} << num_qubits);
        double n2 = 0.0;
        for (auto& a : amps) {
            a = Complex(g(rng_), g(rng_));
            n2 += std::norm(a);
        }
        for (auto& a : amps) a /= std::sqrt(n2);
        return StateVector(std::move(amps));
    }

    UnitaryOperator sign_diagonal(int num_qubits) {
        std::vector<Complex> d(std::size_t{1} << num_qubits);
        for (auto& x : d) x = below(2) ? -1.0 : 1.0;
        return UnitaryOperator(Matrix::diagonal(d));
    }

    UnitaryOperator two_qubit_gate() {
        const auto& hs = gates::standard_hadamards();
        switch (below(6)) {
            case 0: return hs.first;
            case 1: return hs.second;
            case 2: return hs.both;
            case 3: return build_oracle(TruthTable::from_index(static_cast<unsigned>(below(16))));
            case 4: return tensor_product(single_qubit(), gates::identity());
            default: return tensor_product(single_qubit(), single_qubit());
        }
    }

private:
    std::mt19937 rng_;
};

}  // namespace

TEST(Properties, GateSequencesStayUnitaryAndNormalized) {
    Sampler sample(20240611);
    double worst_norm = 0.0;
    double worst_unitary = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        StateVector s = sample.state(2);
        UnitaryOperator total = UnitaryOperator::identity(2);
        const int length = 1 + sample.below(20);
        for (int k = 0; k < length; ++k) {
            const auto g = sample.two_qubit_gate();
            worst_unitary = std::max(worst_unitary, g.unitarity_defect());
            s = apply(g, s);
            total = compose(g, total);
            worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
        }
        worst_unitary = std::max(worst_unitary, total.unitarity_defect());
    }
    EXPECT_LT(worst_norm, 1e-12);
    EXPECT_LT(worst_unitary, 1e-12);
}

TEST(Properties, PartialTracesHaveUnitTrace) {
    Sampler sample(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto rho = density_from_state(sample.state(2));
        for (int q : {1, 2}) EXPECT_NEAR(std::abs(partial_trace(rho, q).entries().trace()), 1.0, 1e-12);
    }
}

TEST(Properties, PureDensityMatricesAreIdempotent) {
    Sampler sample(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = density_from_state(sample.state(1 + sample.below(3)));
        EXPECT_LT(max_abs_diff(rho.entries() * rho.entries(), rho.entries()), 1e-11);
        EXPECT_TRUE(is_positive_semidefinite(rho));
    }
}

TEST(Properties, TensorProductIsAssociative) {
    Sampler sample(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = sample.sign_diagonal(1 + sample.below(2));
        const auto b = sample.sign_diagonal(1 + sample.below(2));
        const auto c = sample.sign_diagonal(1 + sample.below(2));
        const auto left = tensor_product(tensor_product(a, b), c);
        const auto right = tensor_product(a, tensor_product(b, c));
        EXPECT_LT(max_abs_diff(left.entries(), right.entries()), 1e-12);
    }
}

TEST(Properties, ProductStatesHaveZeroConcurrence) {
    Sampler sample(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = tensor_product(sample.state(1), sample.state(1));
        const auto r = analyze_pure_state(s);
        EXPECT_LT(r.concurrence, 1e-10);
        EXPECT_FALSE(r.is_entangled);
    }
}

TEST(Properties, PurityConcurrenceRelation) {
    Sampler sample(99);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = sample.state(2);
        const auto r = analyze_pure_state(s);
        // purity of the reduced state computed independently of the report
        const double p2 = purity(partial_trace(density_from_state(s), 2));
        worst = std::max(worst, std::abs(p2 - (1.0 - r.concurrence * r.concurrence / 2.0)));
        EXPECT_NEAR(r.reduced_purity_q1, r.reduced_purity_q2, 1e-10);
        const double l1 = r.schmidt_coefficients[0], l2 = r.schmidt_coefficients[1];
        EXPECT_GE(l1, l2);
        EXPECT_NEAR(l1 * l1 + l2 * l2, 1.0, 1e-10);
        EXPECT_NEAR(r.concurrence, 2.0 * l1 * l2, 1e-10);
    }
    EXPECT_LT(worst, 1e-10);
}
