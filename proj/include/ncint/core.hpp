/** \file core.hpp
 *  \brief Dense complex matrix container and elementary matrix algebra.
 *
 *  Everything in the toolkit works on small-to-moderate dense matrices
 *  (dim up to a few thousand).  Matrices are stored row-major in a flat
 *  std::vector<std::complex<double>> with value semantics; operators that
 *  carry extra invariants (Hermiticity, embeddings) wrap CMatrix and
 *  validate on construction.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncint {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;

  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  /// Pointer to the start of row i (row-major layout).
  cplx* row(std::size_t i) { return a_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<cplx> a_;
};

CMatrix adjoint(const CMatrix& m);
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, cplx factor);

double frobenius_norm(const CMatrix& m);
/// Largest absolute entry; cheap scale estimate used by tolerance checks.
double max_abs_entry(const CMatrix& m);
/// Max |m - m^H| entry relative to the matrix scale; 0 for exactly Hermitian input.
double hermiticity_defect(const CMatrix& m);
/// True if every entry has zero imaginary part up to absolute tolerance.
bool is_real_matrix(const CMatrix& m, double tol = 0.0);

/// Selfadjoint operator on a finite-dimensional space.  Construction
/// enforces Hermiticity to 1e-12 relative tolerance and then symmetrizes
/// the entries exactly, so downstream code may rely on m(i,j) == conj(m(j,i)).
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix m);

  std::size_t dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

/// Arbitrary (possibly non-normal) operator; no invariants beyond squareness.
class GeneralOperator {
 public:
  explicit GeneralOperator(CMatrix m);

  std::size_t dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

/// Injective embedding iota: C^source -> C^target with closed range,
/// validated to have full column rank (smallest singular value above
/// 1e-10 times the largest).
class Embedding {
 public:
  explicit Embedding(CMatrix m);

  std::size_t source_dim() const { return m_.cols(); }
  std::size_t target_dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

}  // namespace ncint
