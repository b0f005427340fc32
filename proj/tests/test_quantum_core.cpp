#include "evenodd/gates.hpp"
#include "evenodd/quantum_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace evenodd;

namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_matrix_near(const Matrix& actual, const std::vector<Complex>& row_major, double tol = kTol) {
    ASSERT_EQ(actual.dim() * actual.dim(), row_major.size());
    for (std::size_t r = 0; r < actual.dim(); ++r)
        for (std::size_t c = 0; c < actual.dim(); ++c) {
            const Complex want = row_major[r * actual.dim() + c];
            EXPECT_NEAR(actual(r, c).real(), want.real(), tol) << "(" << r << "," << c << ") real";
            EXPECT_NEAR(actual(r, c).imag(), want.imag(), tol) << "(" << r << "," << c << ") imag";
        }
}

void expect_state_near(const StateVector& s, const std::vector<Complex>& ref, double tol = kTol) {
    ASSERT_EQ(s.dim(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i;
        EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i;
    }
}

UnitaryOperator diag2(double a, double b) {
    const std::vector<Complex> d{a, b};
    return UnitaryOperator(Matrix::diagonal(d));
}

DensityMatrix rho_even_plus() {
    return density_from_state(StateVector({kInvSqrt2, kInvSqrt2, 0.0, 0.0}));
}

DensityMatrix rho_odd_minus() {
    return density_from_state(StateVector({0.0, kInvSqrt2, -kInvSqrt2, 0.0}));
}

}  // namespace

// ---------- construction ----------

TEST(StateVector, RejectsUnnormalized) {
    EXPECT_THROW(StateVector({1.0, 1.0}), std::invalid_argument);
}

TEST(StateVector, RejectsNonPowerOfTwoLength) {
    EXPECT_THROW(StateVector({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({1.0}), std::invalid_argument);
}

TEST(StateVector, RejectsNonFinite) {
    EXPECT_THROW(StateVector({std::nan(""), 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({INFINITY, 0.0}), std::invalid_argument);
}

TEST(StateVector, EnforcesQubitCap) {
    EXPECT_THROW(StateVector::basis(13, 0), std::invalid_argument);
    EXPECT_NO_THROW(StateVector::basis(12, 4095));
}

TEST(StateVector, BasisFromBits) {
    const auto s = StateVector::basis("10");
    EXPECT_EQ(s.num_qubits(), 2);
    expect_state_near(s, {0.0, 0.0, 1.0, 0.0});
}

TEST(DensityMatrix, RejectsNonHermitianOrBadTrace) {
    EXPECT_THROW(DensityMatrix(Matrix(2, {0.5, 0.1, 0.2, 0.5})), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(Matrix(2, {0.5, 0.0, 0.0, 0.6})), std::invalid_argument);
}

TEST(DensityMatrix, PositivityCheckedOnDemand) {
    // Hermitian, trace one, eigenvalues 1.5 and -0.5.
    const DensityMatrix bad(Matrix(2, {0.5, 1.0, 1.0, 0.5}));
    EXPECT_FALSE(is_positive_semidefinite(bad));
    EXPECT_TRUE(is_positive_semidefinite(rho_even_plus()));
}

TEST(UnitaryOperator, RejectsNonUnitary) {
    EXPECT_THROW(UnitaryOperator(Matrix(2, {1.0, 1.0, 0.0, 1.0})), std::invalid_argument);
}

// ---------- tensor_product ----------

TEST(TensorProduct, HadamardOnFirstQubit) {
    const auto h1 = tensor_product(gates::hadamard(), gates::identity());
    const double s = kInvSqrt2;
    // H (x) I written out by hand
    expect_matrix_near(h1.entries(), {s, 0, s, 0,  //
                                      0, s, 0, s,  //
                                      s, 0, -s, 0,  //
                                      0, s, 0, -s});
}

TEST(TensorProduct, IdentityTimesIdentity) {
    expect_matrix_near(tensor_product(gates::identity(), gates::identity()).entries(),
                       {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
}

TEST(TensorProduct, DiagonalFactorsOfBalancedOracle) {
    const auto u = tensor_product(diag2(1, -1), diag2(1, 1));
    expect_matrix_near(u.entries(), {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
}

// ---------- apply ----------

TEST(Apply, HadamardOnZero) {
    expect_state_near(apply(gates::hadamard(), StateVector::basis(1, 0)), {kInvSqrt2, kInvSqrt2});
}

TEST(Apply, HadamardOnOne) {
    expect_state_near(apply(gates::hadamard(), StateVector::basis(1, 1)), {kInvSqrt2, -kInvSqrt2});
}

TEST(Apply, IdentityLeavesBasisState) {
    expect_state_near(apply(UnitaryOperator::identity(2), StateVector::basis("01")), {0, 1, 0, 0});
}

TEST(Apply, BothHadamardsOnZeroZero) {
    // (H|0>) (x) (H|0>) = (|0>+|1>)(|0>+|1>)/2 expanded term by term.
    expect_state_near(apply(gates::standard_hadamards().both, StateVector::basis("00")), {0.5, 0.5, 0.5, 0.5});
}

TEST(Apply, DimensionMismatchThrows) {
    EXPECT_THROW(apply(gates::hadamard(), StateVector::basis(2, 0)), std::invalid_argument);
}

// ---------- density_from_state ----------

TEST(DensityFromState, EvenFinalPlusSign) {
    expect_matrix_near(rho_even_plus().entries(), {0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST(DensityFromState, BasisState) {
    expect_matrix_near(density_from_state(StateVector::basis("00")).entries(),
                       {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST(DensityFromState, OddFinalMinusSign) {
    expect_matrix_near(rho_odd_minus().entries(), {0, 0, 0, 0, 0, 0.5, -0.5, 0, 0, -0.5, 0.5, 0, 0, 0, 0, 0});
}

// ---------- partial_trace ----------

TEST(PartialTrace, EvenKeepSecond) {
    expect_matrix_near(partial_trace(rho_even_plus(), 2).entries(), {0.5, 0.5, 0.5, 0.5});
}

TEST(PartialTrace, OddKeepSecondIsMaximallyMixed) {
    expect_matrix_near(partial_trace(rho_odd_minus(), 2).entries(), {0.5, 0, 0, 0.5});
}

TEST(PartialTrace, ProductStateKeepFirst) {
    expect_matrix_near(partial_trace(density_from_state(StateVector::basis("01")), 1).entries(), {1, 0, 0, 0});
}

TEST(PartialTrace, InvalidQubitIndex) {
    EXPECT_THROW(partial_trace(rho_even_plus(), 0), std::invalid_argument);
    EXPECT_THROW(partial_trace(rho_even_plus(), 3), std::invalid_argument);
}

TEST(PartialTrace, RequiresTwoQubits) {
    EXPECT_THROW(partial_trace(density_from_state(StateVector::basis(3, 0)), 1), std::invalid_argument);
}

// ---------- purity ----------

TEST(Purity, MaximallyMixedQubit) {
    EXPECT_NEAR(purity(DensityMatrix(Matrix(2, {0.5, 0, 0, 0.5}))), 0.5, kTol);
}

TEST(Purity, PureQubit) { EXPECT_NEAR(purity(DensityMatrix(Matrix(2, {1, 0, 0, 0}))), 1.0, kTol); }

TEST(Purity, ReducedEvenIsPure) {
    // ((1/2)[[1,1],[1,1]])^2 = (1/4)[[2,2],[2,2]]; trace = 1.
    EXPECT_NEAR(purity(partial_trace(rho_even_plus(), 2)), 1.0, kTol);
}

// ---------- overlap ----------

TEST(Overlap, EvenAndOddFinalsAreNotOrthogonal) {
    // <(+00 + 01)/sqrt2 | (+10 + 01)/sqrt2> = (<01|01>)/2 = 1/2
    const StateVector even({kInvSqrt2, kInvSqrt2, 0.0, 0.0});
    const StateVector odd({0.0, kInvSqrt2, kInvSqrt2, 0.0});
    const Complex ov = overlap(even, odd);
    EXPECT_NEAR(ov.real(), 0.5, kTol);
    EXPECT_NEAR(ov.imag(), 0.0, kTol);
}

TEST(Overlap, SelfIsOne) {
    const StateVector s({0.5, Complex(0, 0.5), -0.5, 0.5});
    EXPECT_NEAR(overlap(s, s).real(), 1.0, kTol);
}

TEST(Overlap, OrthogonalBasisStates) {
    EXPECT_NEAR(std::abs(overlap(StateVector::basis("00"), StateVector::basis("11"))), 0.0, kTol);
}

TEST(Overlap, DimensionMismatchThrows) {
    EXPECT_THROW(overlap(StateVector::basis(1, 0), StateVector::basis(2, 0)), std::invalid_argument);
}

// ---------- phase equivalence ----------

TEST(Phase, GlobalPhaseIsIgnored) {
    const StateVector a({kInvSqrt2, kInvSqrt2, 0.0, 0.0});
    const StateVector b({-kInvSqrt2, -kInvSqrt2, 0.0, 0.0});
    const Complex i(0, 1);
    const StateVector c({i * kInvSqrt2, i * kInvSqrt2, 0.0, 0.0});
    EXPECT_TRUE(equivalent_up_to_phase(a, b));
    EXPECT_TRUE(equivalent_up_to_phase(a, c));
    EXPECT_LT(max_abs_diff(align_phase(c, a), a), kTol);
    EXPECT_FALSE(equivalent_up_to_phase(a, StateVector({kInvSqrt2, -kInvSqrt2, 0.0, 0.0})));
}

TEST(Hadamard, IsSelfInverse) {
    const auto h = gates::hadamard();
    EXPECT_LT(max_abs_diff(compose(h, h).entries(), Matrix::identity(2)), kTol);
}
