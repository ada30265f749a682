/** \file oracles.hpp
 *  \brief Independent reference computations for the test suite.
 *
 *  The eigenvalue oracle goes through the characteristic polynomial
 *  (Faddeev-LeVerrier) and a Durand-Kerner root finder, both in long
 *  double, sharing no code with the Jacobi or QL solvers under test.
 *  Only small dimensions (n <= 12) are used this way; beyond that the
 *  polynomial route loses accuracy.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "ncint/core.hpp"

namespace oracle {

using lcplx = std::complex<long double>;

/// Monic characteristic polynomial coefficients of a square matrix,
/// ascending order: p(x) = c[0] + c[1] x + ... + c[n-1] x^{n-1} + x^n.
inline std::vector<lcplx> charpoly(const ncint::CMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<lcplx> m(n * n), next(n * n), c(n + 1);
  c[n] = 1.0L;
  for (std::size_t i = 0; i < n * n; ++i)
    m[i] = lcplx(a.data()[i].real(), a.data()[i].imag());
  std::vector<lcplx> work = m;
  for (std::size_t k = 1; k <= n; ++k) {
    lcplx trace = 0.0L;
    for (std::size_t i = 0; i < n; ++i) trace += work[i * n + i];
    const lcplx ck = -trace / static_cast<long double>(k);
    c[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) work[i * n + i] += ck;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        lcplx s = 0.0L;
        for (std::size_t l = 0; l < n; ++l) s += m[i * n + l] * work[l * n + j];
        next[i * n + j] = s;
      }
    work.swap(next);
  }
  return c;
}

/// All roots of a monic polynomial (ascending coefficients, c.back() = 1)
/// by Durand-Kerner iteration.
inline std::vector<lcplx> polynomial_roots(const std::vector<lcplx>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<lcplx> r(n);
  const lcplx seed(0.4L, 0.9L);
  lcplx pw = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    pw *= seed;
    r[i] = pw;
  }
  const auto eval = [&](lcplx x) {
    lcplx v = c[n];
    for (std::size_t k = n; k-- > 0;) v = v * x + c[k];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double shift = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      lcplx denom = 1.0L;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= (r[i] - r[j]);
      const lcplx delta = eval(r[i]) / denom;
      r[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-19L) break;
  }
  return r;
}

/// Eigenvalues through the polynomial route, sorted by descending real
/// part (suitable for Hermitian input after discarding imaginary dust).
inline std::vector<long double> hermitian_eigen_oracle(const ncint::CMatrix& a) {
  const std::vector<lcplx> roots = polynomial_roots(charpoly(a));
  std::vector<long double> vals(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) vals[i] = roots[i].real();
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

inline ncint::CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ncint::CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = nd(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const ncint::cplx v(nd(rng), nd(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

inline ncint::CMatrix random_real_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ncint::CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = nd(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = nd(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

/// Random positive semidefinite matrix G^H G (scaled).
inline ncint::CMatrix random_psd(std::mt19937_64& rng, std::size_t n) {
  const ncint::CMatrix g = random_hermitian(rng, n);
  return ncint::scale(ncint::matmul(ncint::adjoint(g), g),
                      ncint::cplx(1.0 / static_cast<double>(n), 0.0));
}

/// Random general (non-Hermitian) complex matrix.
inline ncint::CMatrix random_general(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ncint::CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ncint::cplx(nd(rng), nd(rng));
  return m;
}

/// Random tall embedding with orthonormal-ish columns (full column rank
/// with probability 1); Gram-Schmidt keeps the rank check honest.
inline ncint::CMatrix random_embedding(std::mt19937_64& rng, std::size_t big, std::size_t small) {
  ncint::CMatrix m = random_general(rng, big, small);
  for (std::size_t j = 0; j < small; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      ncint::cplx proj = 0.0;
      for (std::size_t i = 0; i < big; ++i) proj += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < big; ++i) m(i, j) -= proj * m(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < big; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < big; ++i) m(i, j) /= norm;
  }
  return m;
}

}  // namespace oracle
