#pragma once

// Dense complex linear algebra at the sizes two qutrits need (3x3 and 9x9).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qorrel {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError unless entries.size() == rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> ket);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  /// max |M - M^dagger| over all entries; DimensionError if not square.
  double hermiticity_error() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
/// Matrix product; DimensionError on inner-size mismatch.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a_ij - b_ij|; shapes must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// Tensor product, size (ra*rb) x (ca*cb).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Two-qutrit density matrix in the basis |nk> = |n>_A |k>_B, index 3n + k.
/// Construction checks Hermiticity (1e-10), unit trace (1e-10) and that no
/// eigenvalue falls below -1e-9; violations throw InvalidState.
class BipartiteDensityMatrix {
 public:
  static constexpr std::size_t kLocalDim = 3;
  static constexpr std::size_t kDim = kLocalDim * kLocalDim;

  static constexpr double kHermitianTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kNegativityTolerance = 1e-9;

  explicit BipartiteDensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  static constexpr std::size_t index(std::size_t a, std::size_t b) { return a * kLocalDim + b; }
  /// rho_{nk,ml}
  const Complex& element(std::size_t n, std::size_t k, std::size_t m, std::size_t l) const {
    return m_(index(n, k), index(m, l));
  }

 private:
  ComplexMatrix m_;
};

/// (rho_A)_{nm} = sum_k rho_{nk,mk}
ComplexMatrix partial_trace_B(const BipartiteDensityMatrix& rho);
/// (rho_B)_{km} = sum_n rho_{nk,nm}
ComplexMatrix partial_trace_A(const BipartiteDensityMatrix& rho);
/// General-dimension forms; DimensionError unless m is (dimA*dimB) square.
ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix partial_trace_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Ascending eigenvalues of a Hermitian matrix (Hermitian within 1e-8,
/// otherwise DomainError).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Entropy in bits of a spectrum: -sum lambda log2 lambda, 0 log 0 = 0.
/// Values in [-1e-9, 0) count as 0; anything lower throws InvalidState.
double entropy_bits(std::span<const double> spectrum);

/// Shannon entropy in bits of a probability vector.
double shannon_entropy(std::span<const double> p);

/// von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const BipartiteDensityMatrix& rho);

}  // namespace qorrel
