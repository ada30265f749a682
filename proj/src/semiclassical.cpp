#include "ncint/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncint/eig.hpp"
#include "ncint/matops.hpp"

namespace ncint::semiclassical {

namespace {

bool is_diagonal(const CMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != cplx(0.0, 0.0)) return false;
  return true;
}

double spectral_scale(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

std::size_t count_below_threshold(const std::vector<double>& values, double bound) {
  // #{ lambda < bound - tol }, tol = 1e-12 * scale.
  const double tol = 1e-12 * spectral_scale(values);
  std::size_t count = 0;
  for (double v : values)
    if (v < bound - tol) ++count;
  return count;
}

SweepReport finish_sweep(std::vector<SweepPoint> points, weyl::IntegralReport k_integral,
                         std::size_t extrap_points) {
  SweepReport rep;
  rep.points = std::move(points);
  rep.k_integral = std::move(k_integral);

  // Mean of h2count over the smallest guard-passing h values; points are in
  // decreasing h order, so those sit at the tail.
  double acc = 0.0;
  std::size_t used = 0;
  for (auto it = rep.points.rbegin(); it != rep.points.rend() && used < extrap_points; ++it) {
    if (!it->guard_ok) continue;
    acc += it->h2count;
    ++used;
  }
  if (used == 0) throw std::runtime_error("semiclassical sweep: no h value passed the resolution guard");
  rep.extrapolated = acc / static_cast<double>(used);
  rep.extrapolation_points = used;
  rep.discrepancy = std::abs(rep.extrapolated - rep.k_integral.integral);
  return rep;
}

void require_decreasing(const std::vector<double>& h_list) {
  if (h_list.empty()) throw std::invalid_argument("semiclassical sweep: empty h list");
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0.0)) throw std::invalid_argument("semiclassical sweep: h must be positive");
    if (i > 0 && !(h_list[i] < h_list[i - 1]))
      throw std::invalid_argument("semiclassical sweep: h list must be decreasing");
  }
}

}  // namespace

FormPair FormPair::make(HermitianOperator h, HermitianOperator v) {
  if (h.dim() != v.dim()) throw std::invalid_argument("FormPair: dimension mismatch");
  const std::vector<double> hvals = eig::symmetric_eigenvalues(h.matrix());
  const double kernel_tol = 1e-10 * spectral_scale(hvals);
  std::size_t kernel = 0;
  double gap = 0.0;
  for (double lam : hvals) {
    if (lam < -kernel_tol)
      throw std::invalid_argument("FormPair: H is not positive semidefinite");
    if (lam <= kernel_tol)
      ++kernel;
    else
      gap = (gap == 0.0) ? lam : std::min(gap, lam);
  }
  if (!(gap > 0.0)) throw std::invalid_argument("FormPair: H has no positive spectral part");
  FormPair pair{std::move(h), std::move(v)};
  pair.kernel_dim = kernel;
  pair.gap = gap;
  return pair;
}

HermitianOperator birman_schwinger_operator(const FormPair& pair) {
  const CMatrix& hm = pair.h.matrix();
  const std::size_t n = hm.rows();
  const double kernel_tol = 1e-10 * std::max(pair.gap, max_abs_entry(hm));

  if (is_diagonal(hm)) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double lam = hm(i, i).real();
      w[i] = (lam <= kernel_tol) ? 0.0 : 1.0 / std::sqrt(lam);
    }
    CMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k(i, j) = w[i] * pair.v.matrix()(i, j) * w[j];
    return HermitianOperator(std::move(k));
  }

  eig::JacobiOptions opt;
  opt.compute_vectors = true;
  eig::EigResult er = eig::jacobi_auto(hm, opt);
  CMatrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (er.values[j] <= kernel_tol) ? 0.0 : 1.0 / std::sqrt(er.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = er.vectors(i, j) * w;
  }
  const CMatrix root_inv = matmul(scaled, adjoint(er.vectors));
  return HermitianOperator(matmul(root_inv, matmul(pair.v.matrix(), root_inv)));
}

std::size_t negative_count(const FormPair& pair, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("negative_count: h must be positive");
  const CMatrix sum = add(scale(pair.h.matrix(), cplx(h * h, 0.0)), pair.v.matrix());
  const std::vector<double> vals = eig::symmetric_eigenvalues(sum);
  return count_below_threshold(vals, 0.0);
}

SandwichResult sandwich_check(const FormPair& pair) {
  const HermitianOperator k = birman_schwinger_operator(pair);
  const std::vector<double> kvals = eig::symmetric_eigenvalues(k.matrix());
  SandwichResult r;
  r.lower = count_below_threshold(kvals, -1.0);
  r.mid = negative_count(pair, 1.0);
  r.upper = r.lower + pair.kernel_dim;
  r.holds = r.lower <= r.mid && r.mid <= r.upper;
  return r;
}

SweepReport semiclassical_sweep(const FormPair& pair, const std::vector<double>& h_list,
                                const weyl::WeylWindow& window, std::size_t extrap_points) {
  require_decreasing(h_list);
  {
    const std::vector<double> vvals = eig::symmetric_eigenvalues(pair.v.matrix());
    const double vscale = spectral_scale(vvals);
    for (double lam : vvals)
      if (lam < -1e-10 * vscale)
        throw std::invalid_argument("semiclassical_sweep: V must be positive semidefinite");
  }
  const std::size_t dim = pair.h.dim();
  const FormPair attractive{pair.h, HermitianOperator(scale(pair.v.matrix(), cplx(-1.0, 0.0))),
                            pair.kernel_dim, pair.gap};

  std::vector<SweepPoint> points;
  points.reserve(h_list.size());
  for (double h : h_list) {
    SweepPoint pt;
    pt.h = h;
    pt.count = negative_count(attractive, h);
    pt.h2count = h * h * static_cast<double>(pt.count);
    pt.guard_ok = pt.count <= dim / 4;
    points.push_back(pt);
  }

  const HermitianOperator k = birman_schwinger_operator(pair);
  return finish_sweep(std::move(points), weyl::weyl_to_integral(k, window), extrap_points);
}

SweepReport circle_sweep(const models::TorusSymbolModel& potential,
                         const std::vector<double>& h_list, const weyl::WeylWindow& window,
                         std::size_t extrap_points) {
  require_decreasing(h_list);
  if (potential.n != 1 || !potential.symmetrized || potential.m != 1.0)
    throw std::invalid_argument("circle_sweep: potential must be a 1-d symmetrized order-1 model");
  if (potential.support_radius() > 1)
    throw std::invalid_argument("circle_sweep: potential support radius must be at most 1");
  const cplx v0 = potential.fhat_at(0), v1 = potential.fhat_at(1);
  if (v0.imag() != 0.0 || v1.imag() != 0.0 || !potential.real_symbol())
    throw std::invalid_argument("circle_sweep: potential must have real Fourier coefficients");
  // V >= 0 as a multiplication operator means V(x) >= 0 pointwise; for a
  // radius-1 symbol that is v0 >= 2|v1|.
  if (v0.real() < 2.0 * std::abs(v1.real()))
    throw std::invalid_argument("circle_sweep: potential is not pointwise nonnegative");

  const int K = static_cast<int>(potential.cutoff);
  const std::size_t dim = static_cast<std::size_t>(2 * K + 1);

  std::vector<double> hdiag(dim);
  for (std::size_t i = 0; i < dim; ++i)
    hdiag[i] = std::abs(static_cast<double>(static_cast<int>(i) - K));

  std::vector<SweepPoint> points;
  points.reserve(h_list.size());
  std::vector<double> d(dim), e(dim - 1, -v1.real());
  for (double h : h_list) {
    for (std::size_t i = 0; i < dim; ++i) d[i] = h * h * hdiag[i] - v0.real();
    double mscale = std::abs(v1.real());
    for (double di : d) mscale = std::max(mscale, std::abs(di));
    SweepPoint pt;
    pt.h = h;
    pt.count = eig::tridiagonal_count_below(d, e, -1e-12 * mscale);
    pt.h2count = h * h * static_cast<double>(pt.count);
    pt.guard_ok = pt.count <= dim / 4;
    points.push_back(pt);
  }

  const spectra::SpectralSequence kseq = models::torus_tridiagonal_spectrum(potential);
  return finish_sweep(std::move(points), weyl::weyl_to_integral(kseq, window), extrap_points);
}

}  // namespace ncint::semiclassical
