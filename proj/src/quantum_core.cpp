#include "evenodd/quantum_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace evenodd {

namespace {

int qubits_for_dim(std::size_t dim, const char* what) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument(std::string(what) + ": dimension must be a power of two >= 2, got " +
                                    std::to_string(dim));
    }
    const int n = std::countr_zero(dim);
    if (n > kMaxQubits) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                    " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
    return n;
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
    if (!std::all_of(values.begin(), values.end(), finite)) {
        throw std::invalid_argument(std::string(what) + ": non-finite component");
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------- Matrix ----------

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("Matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(data_.size()));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_diagonal(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (r != c && std::abs((*this)(r, c)) > tol) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.dim_, b.dim_, "Matrix product");
    const std::size_t d = a.dim_;
    Matrix out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < d; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_dim(a.dim_, b.dim_, "Matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_dim(a.dim_, b.dim_, "Matrix difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(Complex s, const Matrix& m) {
    Matrix out = m;
    for (auto& z : out.data_) z *= s;
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix out(da * db);
    for (std::size_t ar = 0; ar < da; ++ar)
        for (std::size_t ac = 0; ac < da; ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < db; ++br)
                for (std::size_t bc = 0; bc < db; ++bc) out(ar * db + br, ac * db + bc) = s * b(br, bc);
        }
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

// ---------- StateVector ----------

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    num_qubits_ = qubits_for_dim(amplitudes_.size(), "StateVector");
    require_finite(amplitudes_, "StateVector");
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > kTolerance) {
        throw std::invalid_argument("StateVector: not normalized (|psi|^2 = " + std::to_string(n2) + ")");
    }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector::basis: qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) throw std::invalid_argument("StateVector::basis: index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::basis(const std::string& bits) {
    std::size_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("StateVector::basis: bad bit string '" + bits + "'");
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    return basis(static_cast<int>(bits.size()), index);
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum;
}

// ---------- DensityMatrix ----------

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    num_qubits_ = qubits_for_dim(entries_.dim(), "DensityMatrix");
    require_finite(entries_.data(), "DensityMatrix");
    if (max_abs_diff(entries_, entries_.adjoint()) > kTolerance) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(entries_.trace() - 1.0) > kTolerance) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

// ---------- UnitaryOperator ----------

UnitaryOperator::UnitaryOperator(Matrix entries) : entries_(std::move(entries)) {
    num_qubits_ = qubits_for_dim(entries_.dim(), "UnitaryOperator");
    require_finite(entries_.data(), "UnitaryOperator");
    if (unitarity_defect() > kTolerance) {
        throw std::invalid_argument("UnitaryOperator: U^dagger U != I");
    }
}

UnitaryOperator UnitaryOperator::identity(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("UnitaryOperator::identity: qubit count out of range");
    }
    return UnitaryOperator(Matrix::identity(std::size_t{1} << num_qubits));
}

UnitaryOperator UnitaryOperator::adjoint() const { return UnitaryOperator(entries_.adjoint()); }

double UnitaryOperator::unitarity_defect() const {
    return max_abs_diff(entries_.adjoint() * entries_, Matrix::identity(entries_.dim()));
}

// ---------- operations ----------

UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw std::invalid_argument("tensor_product: result exceeds qubit cap");
    }
    return UnitaryOperator(kron(a.entries(), b.entries()));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto& x : a.amplitudes())
        for (const auto& y : b.amplitudes()) amps.push_back(x * y);
    return StateVector(std::move(amps));
}

UnitaryOperator compose(const UnitaryOperator& a, const UnitaryOperator& b) {
    require_same_dim(a.dim(), b.dim(), "compose");
    return UnitaryOperator(a.entries() * b.entries());
}

StateVector apply(const UnitaryOperator& u, const StateVector& s) {
    require_same_dim(u.dim(), s.dim(), "apply");
    std::vector<Complex> out(s.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < u.dim(); ++c) acc += u(r, c) * s[c];
        out[r] = acc;
    }
    return StateVector(std::move(out));
}

DensityMatrix density_from_state(const StateVector& s) {
    Matrix rho(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c) rho(r, c) = s[r] * std::conj(s[c]);
    return DensityMatrix(std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep_qubit) {
    if (rho.num_qubits() != 2) {
        throw std::invalid_argument("partial_trace: expected a two-qubit density matrix, got " +
                                    std::to_string(rho.num_qubits()) + " qubits");
    }
    if (keep_qubit != 1 && keep_qubit != 2) {
        throw std::invalid_argument("partial_trace: qubit index must be 1 or 2, got " + std::to_string(keep_qubit));
    }
    // index = 2 * q1 + q2
    Matrix reduced(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < 2; ++t) {
                reduced(i, j) += keep_qubit == 1 ? rho(2 * i + t, 2 * j + t) : rho(2 * t + i, 2 * t + j);
            }
    return DensityMatrix(std::move(reduced));
}

double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    double sum = 0.0;
    for (const auto& z : rho.entries().data()) sum += std::norm(z);
    return sum;
}

Complex overlap(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "overlap");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

bool equivalent_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    return std::abs(std::abs(overlap(a, b)) - 1.0) <= tol;
}

StateVector align_phase(const StateVector& s, const StateVector& reference) {
    const Complex ov = overlap(reference, s);
    const double mag = std::abs(ov);
    if (mag == 0.0) return s;
    const Complex phase = std::conj(ov) / mag;
    std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& a : amps) a *= phase;
    return StateVector(std::move(amps));
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<double> eigenvalues(const DensityMatrix& rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rho(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalues: solver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

bool is_positive_semidefinite(const DensityMatrix& rho, double tol) {
    const auto ev = eigenvalues(rho);
    return std::all_of(ev.begin(), ev.end(), [tol](double x) { return x >= -tol; });
}

}  // namespace evenodd
