#include "qorrel/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qorrel/error.hpp"
#include "qorrel/jacobi.hpp"

namespace qorrel {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::hermiticity_error() const {
  if (!is_square()) throw DimensionError("Hermiticity of a non-square matrix");
  double err = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return err;
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix shapes differ");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_difference(a, b) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

BipartiteDensityMatrix::BipartiteDensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != kDim || m_.cols() != kDim)
    throw DimensionError("two-qutrit density matrix must be 9x9");
  const double herm = m_.hermiticity_error();
  if (herm > kHermitianTolerance)
    throw InvalidState("density matrix not Hermitian (deviation " + std::to_string(herm) + ")");
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance)
    throw InvalidState("density matrix trace " + std::to_string(tr.real()) + " != 1");
  const auto ev = hermitian_eigenvalues(m_);
  if (ev.front() < -kNegativityTolerance)
    throw InvalidState("density matrix has eigenvalue " + std::to_string(ev.front()));
}

ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionError("partial trace: matrix is not (dimA*dimB) square");
  ComplexMatrix out(dim_a, dim_a);
  for (std::size_t n = 0; n < dim_a; ++n)
    for (std::size_t mm = 0; mm < dim_a; ++mm)
      for (std::size_t k = 0; k < dim_b; ++k) out(n, mm) += m(n * dim_b + k, mm * dim_b + k);
  return out;
}

ComplexMatrix partial_trace_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionError("partial trace: matrix is not (dimA*dimB) square");
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l)
      for (std::size_t n = 0; n < dim_a; ++n) out(k, l) += m(n * dim_b + k, n * dim_b + l);
  return out;
}

ComplexMatrix partial_trace_B(const BipartiteDensityMatrix& rho) {
  return partial_trace_B(rho.matrix(), 3, 3);
}

ComplexMatrix partial_trace_A(const BipartiteDensityMatrix& rho) {
  return partial_trace_A(rho.matrix(), 3, 3);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  if (h.hermiticity_error() > 1e-8) throw DomainError("hermitian_eigenvalues: input not Hermitian");
  std::vector<Complex> work(h.entries().begin(), h.entries().end());
  std::vector<double> w(h.rows());
  detail::jacobi_eigenvalues(work, h.rows(), w);
  return w;
}

double entropy_bits(std::span<const double> spectrum) {
  double s = 0.0;
  for (double x : spectrum) {
    if (x < -1e-9) throw InvalidState("negative eigenvalue " + std::to_string(x) + " in entropy");
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double shannon_entropy(std::span<const double> p) { return entropy_bits(p); }

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (rho.is_square() && std::abs(rho.trace() - 1.0) > 1e-8)
    throw DomainError("von_neumann_entropy: trace is not 1");
  const auto ev = hermitian_eigenvalues(rho);
  return entropy_bits(ev);
}

double von_neumann_entropy(const BipartiteDensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

}  // namespace qorrel
