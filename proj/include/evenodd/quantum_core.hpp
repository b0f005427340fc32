// quantum_core.hpp
// Dense complex linear algebra for small multi-qubit registers: states,
// density matrices, unitaries, tensor products and partial traces.
//
// Basis ordering: qubit 1 is the most significant bit of the basis index,
// so a two-qubit register is laid out as |00>, |01>, |10>, |11>.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace evenodd {

using Complex = std::complex<double>;

// Equality tolerance for amplitudes and matrix entries.
inline constexpr double kTolerance = 1e-12;
// Lower bound on eigenvalues accepted as "nonnegative".
inline constexpr double kEigenTolerance = 1e-10;
// Dense 2^n x 2^n storage is capped at this register size.
inline constexpr int kMaxQubits = 12;

// Square row-major complex matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Complex> row_major);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const Complex> entries);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> data() const noexcept { return data_; }

    Matrix adjoint() const;
    Complex trace() const;
    bool is_diagonal(double tol = kTolerance) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Complex s, const Matrix& m);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// Kronecker product; a's index is the more significant one.
Matrix kron(const Matrix& a, const Matrix& b);

// max_ij |a_ij - b_ij|; throws on dimension mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Normalized amplitude vector over the computational basis.
class StateVector {
public:
    // Throws std::invalid_argument unless the length is 2^n (1 <= n <= 12),
    // all components are finite and the norm is 1 within kTolerance.
    explicit StateVector(std::vector<Complex> amplitudes);

    // |index> on num_qubits qubits.
    static StateVector basis(int num_qubits, std::size_t index);
    // Basis state from a bit string such as "01" (qubit 1 first).
    static StateVector basis(const std::string& bits);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

// Hermitian, trace-one operator. Positivity is not checked at construction;
// see is_positive_semidefinite().
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix entries);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return entries_.dim(); }
    const Matrix& entries() const noexcept { return entries_; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

private:
    int num_qubits_ = 0;
    Matrix entries_;
};

// Square matrix with U^dagger U = I within kTolerance.
class UnitaryOperator {
public:
    explicit UnitaryOperator(Matrix entries);

    static UnitaryOperator identity(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return entries_.dim(); }
    const Matrix& entries() const noexcept { return entries_; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

    UnitaryOperator adjoint() const;

    // Largest entry of |U^dagger U - I|.
    double unitarity_defect() const;

private:
    int num_qubits_ = 0;
    Matrix entries_;
};

UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

// a * b, i.e. b acts first.
UnitaryOperator compose(const UnitaryOperator& a, const UnitaryOperator& b);

StateVector apply(const UnitaryOperator& u, const StateVector& s);

DensityMatrix density_from_state(const StateVector& s);

// Reduced state of qubit keep_qubit (1 or 2) of a two-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep_qubit);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

// <a|b>.
Complex overlap(const StateVector& a, const StateVector& b);

// a and b are the same ray: |<a|b>| = 1 within tol.
bool equivalent_up_to_phase(const StateVector& a, const StateVector& b, double tol = kTolerance);

// Returns s multiplied by the phase that makes <reference|s> real and
// nonnegative. Used to compare states entrywise modulo global phase.
StateVector align_phase(const StateVector& s, const StateVector& reference);

// max_i |a_i - b_i|.
double max_abs_diff(const StateVector& a, const StateVector& b);

// All eigenvalues >= -kEigenTolerance.
bool is_positive_semidefinite(const DensityMatrix& rho, double tol = kEigenTolerance);
std::vector<double> eigenvalues(const DensityMatrix& rho);

}  // namespace evenodd
