#include "ncint/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncint::eig {

namespace {

template <class T>
inline T conj_of(const T& v) {
  if constexpr (std::is_same_v<T, cplx>)
    return std::conj(v);
  else
    return v;
}

template <class T>
inline double abs_of(const T& v) {
  return std::abs(v);
}

template <class T>
inline double real_of(const T& v) {
  if constexpr (std::is_same_v<T, cplx>)
    return v.real();
  else
    return v;
}

template <class T>
inline double norm2_of(const T& v) {
  if constexpr (std::is_same_v<T, cplx>)
    return std::norm(v);
  else
    return v * v;
}

/// Flat row-major square buffer used by the kernels.
template <class T>
struct Dense {
  std::size_t n = 0;
  std::vector<T> a;

  explicit Dense(std::size_t dim) : n(dim), a(dim * dim, T{}) {}

  T& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  T* row(std::size_t i) { return a.data() + i * n; }
};

template <class T>
double off_diagonal_norm(const Dense<T>& m) {
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m.n); ++i) {
    const T* r = m.a.data() + static_cast<std::size_t>(i) * m.n;
    for (std::size_t j = 0; j < m.n; ++j)
      if (static_cast<std::size_t>(i) != j) s += norm2_of(r[j]);
  }
  return std::sqrt(s);
}

template <class T>
double frob(const Dense<T>& m) {
  double s = 0.0;
  for (const T& v : m.a) s += norm2_of(v);
  return std::sqrt(s);
}

/// One plane rotation J with J_pp = c, J_pq = s, J_qp = -conj(s), J_qq = c,
/// chosen so that (J^H A J)_pq = 0.  c is real, |s|^2 + c^2 = 1.
template <class T>
struct Rotation {
  double c = 1.0;
  T s{};
  double t = 0.0;  // tangent, used for the exact diagonal update
  double g = 0.0;  // |a_pq|
  bool skip = true;
};

template <class T>
Rotation<T> make_rotation(double app, double aqq, const T& apq, double skip_abs) {
  Rotation<T> r;
  const double g = abs_of(apq);
  if (g <= skip_abs) return r;
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  r.c = c;
  r.t = t;
  r.g = g;
  r.s = apq * T(t * c / g);  // t*c*e^{i arg(a_pq)}
  r.skip = false;
  return r;
}

/// Rows p and q of m <- J^H applied from the left.
template <class T>
inline void rotate_rows(Dense<T>& m, std::size_t p, std::size_t q, double c, const T& s) {
  T* rp = m.row(p);
  T* rq = m.row(q);
  const T sc = conj_of(s);
  for (std::size_t k = 0; k < m.n; ++k) {
    const T x = rp[k], y = rq[k];
    rp[k] = c * x - s * y;
    rq[k] = sc * x + c * y;
  }
}

/// Columns p and q of m <- J applied from the right.
template <class T>
inline void rotate_cols(Dense<T>& m, std::size_t p, std::size_t q, double c, const T& s) {
  const T sc = conj_of(s);
  for (std::size_t k = 0; k < m.n; ++k) {
    T* rk = m.row(k);
    const T x = rk[p], y = rk[q];
    rk[p] = c * x - sc * y;
    rk[q] = s * x + c * y;
  }
}

/// After the generic row/column passes the pivot block is diagonal up to
/// roundoff; pin it to the exact similarity values to avoid drift.
template <class T>
inline void pin_block(Dense<T>& m, std::size_t p, std::size_t q, double app0, double aqq0,
                      const Rotation<T>& r) {
  m.at(p, p) = T(app0 - r.t * r.g);
  m.at(q, q) = T(aqq0 + r.t * r.g);
  m.at(p, q) = T{};
  m.at(q, p) = T{};
}

struct CycleStats {
  int sweeps = 0;
  double off_rel = 0.0;
};

/// Textbook cyclic-by-row Jacobi; the serial reference implementation.
template <class T>
CycleStats run_serial(Dense<T>& m, Dense<T>* vecs, const JacobiOptions& opt) {
  const std::size_t n = m.n;
  const double fro = frob(m);
  const double stop_off = opt.tol * fro;
  const double skip_abs = stop_off / (10.0 * static_cast<double>(n) + 1.0);
  for (int sweep = 0; sweep <= opt.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(m);
    if (off <= stop_off) return {sweep, fro > 0.0 ? off / fro : 0.0};
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double app = real_of(m.at(p, p));
        const double aqq = real_of(m.at(q, q));
        const Rotation<T> r = make_rotation(app, aqq, m.at(p, q), skip_abs);
        if (r.skip) continue;
        rotate_rows(m, p, q, r.c, r.s);
        rotate_cols(m, p, q, r.c, r.s);
        pin_block(m, p, q, app, aqq, r);
        if (vecs) rotate_cols(*vecs, p, q, r.c, r.s);
      }
    }
  }
  throw std::runtime_error("jacobi_serial: no convergence within max_sweeps");
}

/// Round-robin ordered Jacobi.  Each tournament round carries n/2 mutually
/// disjoint pivot pairs; their rotations commute, so the round is applied
/// as one left pass over rows and one right pass over columns.  Both passes
/// stream the matrix row-major and are OpenMP worksharing loops.
template <class T>
CycleStats run_round_robin(Dense<T>& m, Dense<T>* vecs, const JacobiOptions& opt) {
  const std::size_t n = m.n;
  const double fro = frob(m);
  const double stop_off = opt.tol * fro;
  const double skip_abs = stop_off / (10.0 * static_cast<double>(n) + 1.0);

  const std::size_t players = n + (n % 2);  // ghost player for odd n
  std::vector<std::size_t> ring(players);
  std::iota(ring.begin(), ring.end(), std::size_t{0});

  struct PairRot {
    std::size_t p, q;
    double c;
    T s;
    double newp, newq;
  };
  std::vector<PairRot> active;
  active.reserve(players / 2);

  for (int sweep = 0; sweep <= opt.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(m);
    if (off <= stop_off) return {sweep, fro > 0.0 ? off / fro : 0.0};

    for (std::size_t round = 0; round + 1 < players; ++round) {
      active.clear();
      for (std::size_t i = 0; i < players / 2; ++i) {
        std::size_t p = (i == 0) ? ring[0] : ring[i];
        std::size_t q = ring[players - 1 - i];
        if (p >= n || q >= n) continue;  // pair with the ghost: bye
        if (p > q) std::swap(p, q);
        const double app = real_of(m.at(p, p));
        const double aqq = real_of(m.at(q, q));
        const Rotation<T> r = make_rotation(app, aqq, m.at(p, q), skip_abs);
        if (r.skip) continue;
        active.push_back({p, q, r.c, r.s, app - r.t * r.g, aqq + r.t * r.g});
      }

      const std::ptrdiff_t n_active = static_cast<std::ptrdiff_t>(active.size());
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n_active; ++i)
        rotate_rows(m, active[i].p, active[i].q, active[i].c, active[i].s);

#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
        T* rk = m.row(static_cast<std::size_t>(k));
        for (const PairRot& pr : active) {
          const T x = rk[pr.p], y = rk[pr.q];
          rk[pr.p] = pr.c * x - conj_of(pr.s) * y;
          rk[pr.q] = pr.s * x + pr.c * y;
        }
      }

      for (const PairRot& pr : active) {
        m.at(pr.p, pr.p) = T(pr.newp);
        m.at(pr.q, pr.q) = T(pr.newq);
        m.at(pr.p, pr.q) = T{};
        m.at(pr.q, pr.p) = T{};
      }

      if (vecs) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
          T* rk = vecs->row(static_cast<std::size_t>(k));
          for (const PairRot& pr : active) {
            const T x = rk[pr.p], y = rk[pr.q];
            rk[pr.p] = pr.c * x - conj_of(pr.s) * y;
            rk[pr.q] = pr.s * x + pr.c * y;
          }
        }
      }

      // Advance the tournament schedule: ring[0] stays, the rest rotate.
      const std::size_t last = ring[players - 1];
      for (std::size_t i = players - 1; i >= 2; --i) ring[i] = ring[i - 1];
      ring[1] = last;
    }
  }
  throw std::runtime_error("jacobi_parallel: no convergence within max_sweeps");
}

template <class T>
Dense<T> load_buffer(const CMatrix& a);

template <>
Dense<cplx> load_buffer<cplx>(const CMatrix& a) {
  Dense<cplx> m(a.rows());
  std::copy(a.data(), a.data() + a.rows() * a.cols(), m.a.begin());
  return m;
}

template <>
Dense<double> load_buffer<double>(const CMatrix& a) {
  Dense<double> m(a.rows());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) m.a[i] = a.data()[i].real();
  return m;
}

template <class T>
EigResult run_typed(const CMatrix& a, const JacobiOptions& opt, bool round_robin) {
  Dense<T> m = load_buffer<T>(a);
  Dense<T> vecs(opt.compute_vectors ? m.n : 0);
  if (opt.compute_vectors)
    for (std::size_t i = 0; i < m.n; ++i) vecs.at(i, i) = T(1.0);

  const CycleStats st = round_robin ? run_round_robin(m, opt.compute_vectors ? &vecs : nullptr, opt)
                                    : run_serial(m, opt.compute_vectors ? &vecs : nullptr, opt);

  EigResult out;
  out.sweeps = st.sweeps;
  out.off_rel = st.off_rel;
  out.values.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) out.values[i] = real_of(m.at(i, i));
  if (opt.compute_vectors) {
    out.vectors = CMatrix(m.n, m.n);
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) out.vectors(i, j) = cplx(vecs.at(i, j));
  }
  return out;
}

EigResult run_dispatch(const CMatrix& a, const JacobiOptions& opt, bool round_robin) {
  if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: matrix is not square");
  if (a.rows() == 0) return {};
  if (is_real_matrix(a))
    return run_typed<double>(a, opt, round_robin);
  return run_typed<cplx>(a, opt, round_robin);
}

}  // namespace

EigResult jacobi_serial(const CMatrix& a, const JacobiOptions& opt) {
  return run_dispatch(a, opt, /*round_robin=*/false);
}

EigResult jacobi_parallel(const CMatrix& a, const JacobiOptions& opt) {
  return run_dispatch(a, opt, /*round_robin=*/true);
}

EigResult jacobi_auto(const CMatrix& a, const JacobiOptions& opt) {
  // The round-robin ordering streams the matrix row-major in both passes,
  // which wins on large problems even single-threaded; plain cyclic order
  // has less bookkeeping and wins on small ones.
  const bool large = a.rows() >= 256;
  return run_dispatch(a, opt, /*round_robin=*/large);
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n)
    throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal length must be n-1");
  if (n == 1) return diag;

  // Implicit-shift QL with the conventional e[] layout e[0..n-1], e[n-1] unused.
  std::vector<double>& d = diag;
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal_eigenvalues: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (!underflow) {
          d[l] -= p;
          e[l] = g;
          e[m] = 0.0;
        }
      }
    } while (m != l);
  }
  return d;
}

std::size_t tridiagonal_count_below(const std::vector<double>& diag,
                                    const std::vector<double>& off, double sigma) {
  const std::size_t n = diag.size();
  if (n == 0) return 0;
  if (off.size() + 1 != n)
    throw std::invalid_argument("tridiagonal_count_below: off-diagonal length must be n-1");
  // LDL^T recurrence; by Sylvester's law of inertia the number of negative
  // pivots equals the number of eigenvalues below sigma.
  std::size_t count = 0;
  double q = diag[0] - sigma;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    if (q == 0.0) q = 1e-300;  // standard safeguard against exact-zero pivots
    q = (diag[i] - sigma) - off[i - 1] * off[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

/// Householder reduction of a real symmetric dense matrix to tridiagonal
/// form, eigenvalues only (no accumulation of the orthogonal factor).
void householder_tridiagonalize(Dense<double>& m, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = m.n;
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t mlen = n - k - 1;
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < mlen; ++i) {
      v[i] = m.at(k + 1 + i, k);
      xnorm2 += v[i] * v[i];
    }
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const double alpha = (v[0] >= 0.0) ? -xnorm : xnorm;
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < mlen; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) {
      e[k] = alpha;
      continue;
    }
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = 0; i < mlen; ++i) v[i] *= inv;

    // p = B v on the trailing block B = m[k+1.., k+1..]
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(mlen); ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      const double* rowi = m.row(k + 1 + i) + (k + 1);
      double s = 0.0;
      for (std::size_t j = 0; j < mlen; ++j) s += rowi[j] * v[j];
      p[i] = s;
    }
    double kappa = 0.0;
    for (std::size_t i = 0; i < mlen; ++i) kappa += v[i] * p[i];
    // q = p - kappa v ; B <- B - 2 v q^T - 2 q v^T
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(mlen); ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      double* rowi = m.row(k + 1 + i) + (k + 1);
      const double qi = p[i] - kappa * v[i];
      const double vi = v[i];
      for (std::size_t j = 0; j < mlen; ++j) {
        const double qj = p[j] - kappa * v[j];
        rowi[j] -= 2.0 * (vi * qj + qi * v[j]);
      }
    }
    m.at(k + 1, k) = alpha;
    e[k] = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = m.at(i, i);
  if (n >= 2) e[n - 2] = m.at(n - 1, n - 2);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  if (a.rows() == 0) return {};
  if (!is_real_matrix(a)) return jacobi_auto(a).values;
  Dense<double> m = load_buffer<double>(a);
  std::vector<double> d, e;
  householder_tridiagonalize(m, d, e);
  return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

}  // namespace ncint::eig
