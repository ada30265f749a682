#include "ncint/core.hpp"

#include <algorithm>
#include <cmath>

#include "ncint/eig.hpp"

namespace ncint {

CMatrix adjoint(const CMatrix& m) {
  CMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  CMatrix r(a.rows(), b.cols());
  const std::size_t n = a.rows(), k_end = a.cols(), m = b.cols();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    cplx* ri = r.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < k_end; ++k) {
      const cplx aik = a(static_cast<std::size_t>(i), k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* bk = b.row(k);
      for (std::size_t j = 0; j < m; ++j) ri[j] += aik * bk[j];
    }
  }
  return r;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) r.data()[i] = a.data()[i] + b.data()[i];
  return r;
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("sub: shape mismatch");
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) r.data()[i] = a.data()[i] - b.data()[i];
  return r;
}

CMatrix scale(const CMatrix& a, cplx factor) {
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) r.data()[i] = factor * a.data()[i];
  return r;
}

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows() * m.cols(); ++i) s += std::norm(m.data()[i]);
  return std::sqrt(s);
}

double max_abs_entry(const CMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows() * m.cols(); ++i) s = std::max(s, std::abs(m.data()[i]));
  return s;
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return 1.0;
  const double scale = max_abs_entry(m);
  if (scale == 0.0) return 0.0;
  double defect = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
  return defect / scale;
}

bool is_real_matrix(const CMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
    if (std::abs(m.data()[i].imag()) > tol) return false;
  return true;
}

HermitianOperator::HermitianOperator(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("HermitianOperator: matrix is not square");
  if (hermiticity_defect(m_) > 1e-12)
    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian to 1e-12 relative tolerance");
  // Symmetrize exactly so that numerical code can rely on the invariant.
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    m_(i, i) = cplx(m_(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      const cplx v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

GeneralOperator::GeneralOperator(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("GeneralOperator: matrix is not square");
}

Embedding::Embedding(CMatrix m) : m_(std::move(m)) {
  if (m_.cols() > m_.rows())
    throw std::invalid_argument("Embedding: source dimension exceeds target dimension");
  if (m_.cols() == 0) throw std::invalid_argument("Embedding: empty source space");
  // Full-column-rank check through the singular values of iota, obtained as
  // the square roots of the eigenvalues of iota^H iota (small s x s problem).
  const CMatrix gram = matmul(adjoint(m_), m_);
  eig::EigResult er = eig::jacobi_auto(gram);
  double smax = 0.0, smin = 0.0;
  for (std::size_t i = 0; i < er.values.size(); ++i) {
    const double s = std::sqrt(std::max(er.values[i], 0.0));
    smax = std::max(smax, s);
    smin = (i == 0) ? s : std::min(smin, s);
  }
  if (smin <= 1e-10 * smax)
    throw std::invalid_argument("Embedding: rank-deficient matrix (smallest singular value below 1e-10 of largest)");
}

}  // namespace ncint
