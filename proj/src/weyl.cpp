#include "ncint/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncint::weyl {

namespace {

struct WindowIndices {
  std::size_t lo;
  std::size_t hi;  // exclusive
};

WindowIndices window_indices(std::size_t len, const WeylWindow& w) {
  if (!(w.resolved_fraction > 0.0) || w.resolved_fraction > 1.0)
    throw std::invalid_argument("weyl window: resolved_fraction must lie in (0,1]");
  if (!(w.lo >= 0.0) || !(w.hi > w.lo) || w.hi > 1.0)
    throw std::invalid_argument("weyl window: need 0 <= lo < hi <= 1");
  const double r = w.resolved_fraction * static_cast<double>(len);
  const std::size_t lo = static_cast<std::size_t>(std::floor(w.lo * r));
  const std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(std::ceil(w.hi * r)), len);
  if (lo >= hi) throw std::invalid_argument("weyl window: empty index window");
  return {lo, hi};
}

void require_nonnegative(const spectra::SpectralSequence& seq, const char* op) {
  for (const cplx& v : seq.values)
    if (v.imag() != 0.0 || v.real() < 0.0)
      throw std::invalid_argument(std::string(op) + ": sequence must be nonnegative real");
}

WeylEstimate empty_estimate(double p) {
  WeylEstimate e;
  e.p = p;
  e.empty_part = true;
  return e;
}

}  // namespace

WeylEstimate weyl_coefficient(const spectra::SpectralSequence& seq, double p,
                              const WeylWindow& window) {
  if (!(p > 0.0)) throw std::invalid_argument("weyl_coefficient: p must be positive");
  require_nonnegative(seq, "weyl_coefficient");
  if (seq.size() < 32)
    throw std::invalid_argument("weyl_coefficient: need at least 32 entries");
  const WindowIndices w = window_indices(seq.size(), window);

  double mean = 0.0;
  for (std::size_t j = w.lo; j < w.hi; ++j)
    mean += std::pow(static_cast<double>(j), 1.0 / p) * seq.values[j].real();
  mean /= static_cast<double>(w.hi - w.lo);

  double disp = 0.0;
  for (std::size_t j = w.lo; j < w.hi; ++j) {
    const double t = std::pow(static_cast<double>(j), 1.0 / p) * seq.values[j].real();
    disp = std::max(disp, std::abs(t - mean));
  }

  WeylEstimate e;
  e.p = p;
  e.value = mean;
  e.window_lo = w.lo;
  e.window_hi = w.hi;
  e.dispersion = disp;
  e.method = WeylMethod::tail_mean;
  return e;
}

std::pair<WeylEstimate, WeylEstimate> weyl_pm(const spectra::SpectralSequence& seq, double p,
                                              const WeylWindow& window) {
  const auto [plus, minus] = spectra::split_signed(seq);
  // A part of bounded size has vanishing Weyl coefficient (finite rank), so
  // parts too short for a tail window report 0 with the empty_part flag.
  WeylEstimate ep =
      plus.values.size() < 32 ? empty_estimate(p) : weyl_coefficient(plus, p, window);
  WeylEstimate em =
      minus.values.size() < 32 ? empty_estimate(p) : weyl_coefficient(minus, p, window);
  return {ep, em};
}

WeylEstimate counting_limit(const spectra::SpectralSequence& seq, double p,
                            const std::vector<double>& lam_grid, const WeylWindow& window) {
  if (!(p > 0.0)) throw std::invalid_argument("counting_limit: p must be positive");
  require_nonnegative(seq, "counting_limit");
  if (seq.size() < 32) throw std::invalid_argument("counting_limit: need at least 32 entries");
  if (lam_grid.empty()) throw std::invalid_argument("counting_limit: empty grid");
  const WindowIndices w = window_indices(seq.size(), window);
  const double floor_lam = seq.values[w.hi - 1].real();

  for (std::size_t i = 0; i < lam_grid.size(); ++i) {
    if (!(lam_grid[i] > 0.0))
      throw std::invalid_argument("counting_limit: grid values must be positive");
    if (i > 0 && lam_grid[i] > lam_grid[i - 1])
      throw std::invalid_argument("counting_limit: grid must be decreasing");
    if (lam_grid[i] < floor_lam)
      throw std::invalid_argument("counting_limit: grid outside resolved range");
  }

  // N(lam) = #{ j : values[j] > lam } by binary search on the nonincreasing
  // sequence.
  const auto count_above = [&seq](double lam) {
    std::size_t lo = 0, hi = seq.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (seq.values[mid].real() > lam)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };

  std::vector<double> t(lam_grid.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < lam_grid.size(); ++i) {
    t[i] = std::pow(lam_grid[i], p) * static_cast<double>(count_above(lam_grid[i]));
    mean += t[i];
  }
  mean /= static_cast<double>(t.size());

  double disp = 0.0;
  for (double ti : t) disp = std::max(disp, std::abs(ti - mean));

  WeylEstimate e;
  e.p = p;
  e.value = std::pow(std::max(mean, 0.0), 1.0 / p);
  e.window_lo = w.lo;
  e.window_hi = w.hi;
  e.dispersion = disp;
  e.method = WeylMethod::counting;
  return e;
}

WeylEstimate counting_limit(const spectra::SpectralSequence& seq, double p,
                            const WeylWindow& window, std::size_t grid_points) {
  require_nonnegative(seq, "counting_limit");
  if (seq.size() < 32) throw std::invalid_argument("counting_limit: need at least 32 entries");
  if (grid_points < 2) throw std::invalid_argument("counting_limit: need at least 2 grid points");
  const WindowIndices w = window_indices(seq.size(), window);
  const double lam_hi = seq.values[w.lo].real();
  const double lam_lo = seq.values[w.hi - 1].real();
  if (!(lam_lo > 0.0))
    throw std::invalid_argument("counting_limit: window reaches the zero part of the spectrum");
  std::vector<double> grid(grid_points);
  const double step = (std::log(lam_lo) - std::log(lam_hi)) / static_cast<double>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i)
    grid[i] = std::exp(std::log(lam_hi) + step * static_cast<double>(i));
  grid.front() = lam_hi;
  grid.back() = lam_lo;
  return counting_limit(seq, p, grid, window);
}

PerturbationReport perturbation_check(const std::vector<HermitianOperator>& a_prime,
                                      const std::vector<HermitianOperator>& a_double,
                                      const std::vector<double>& eps_list, double p,
                                      const WeylWindow& window, double slack) {
  if (a_prime.size() != a_double.size() || a_prime.size() != eps_list.size())
    throw std::invalid_argument("perturbation_check: list length mismatch");
  if (a_prime.empty()) throw std::invalid_argument("perturbation_check: empty input");
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("perturbation_check: eps_list must be decreasing");

  const CMatrix total = add(a_prime[0].matrix(), a_double[0].matrix());
  const double scale = std::max(max_abs_entry(total), 1e-300);
  for (std::size_t i = 1; i < a_prime.size(); ++i) {
    const CMatrix sum_i = add(a_prime[i].matrix(), a_double[i].matrix());
    if (max_abs_entry(sub(sum_i, total)) > 1e-10 * scale)
      throw std::invalid_argument(
          "perturbation_check: decompositions do not reproduce a common operator");
  }

  const auto [ref_plus, ref_minus] =
      weyl_pm(matops::hermitian_eig(HermitianOperator(total)), p, window);

  PerturbationReport rep;
  rep.eps = eps_list;
  rep.reference_plus = ref_plus;
  rep.reference_minus = ref_minus;
  rep.hypothesis_ok = true;

  for (std::size_t i = 0; i < a_prime.size(); ++i) {
    // Hypothesis: tail sup of j^{1/p} lambda_j^pm(A''_eps) at most eps.
    const spectra::SpectralSequence dd = matops::hermitian_eig(a_double[i]);
    const auto [dp, dm] = spectra::split_signed(dd);
    double sup = 0.0;
    for (const spectra::SpectralSequence* part : {&dp, &dm}) {
      const std::size_t n = part->values.size();
      for (std::size_t j = n / 2; j < n; ++j)
        sup = std::max(sup,
                       std::pow(static_cast<double>(j), 1.0 / p) * part->values[j].real());
    }
    rep.hypothesis_sup.push_back(sup);
    if (sup > eps_list[i] + slack) rep.hypothesis_ok = false;

    const auto [pp, pm] = weyl_pm(matops::hermitian_eig(a_prime[i]), p, window);
    rep.deviation.push_back(std::max(std::abs(pp.value - ref_plus.value),
                                     std::abs(pm.value - ref_minus.value)));
  }

  rep.monotone_trend = true;
  for (std::size_t i = 1; i < rep.deviation.size(); ++i)
    if (rep.deviation[i] > rep.deviation[i - 1] + slack) rep.monotone_trend = false;
  return rep;
}

CMatrix matrix_sqrt_psd(const HermitianOperator& a) {
  eig::JacobiOptions opt;
  opt.compute_vectors = true;
  eig::EigResult er = eig::jacobi_auto(a.matrix(), opt);
  const std::size_t n = er.values.size();
  CMatrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::sqrt(std::max(er.values[j], 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = er.vectors(i, j) * r;
  }
  return matmul(scaled, adjoint(er.vectors));
}

double bks_ratio(const HermitianOperator& a, const HermitianOperator& b, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("bks_ratio: q must be positive");
  if (a.dim() != b.dim()) throw std::invalid_argument("bks_ratio: dimension mismatch");
  for (const HermitianOperator* op : {&a, &b}) {
    const spectra::SpectralSequence s = matops::hermitian_eig(*op);
    double top = 0.0;
    for (const cplx& v : s.values) top = std::max(top, std::abs(v));
    for (const cplx& v : s.values)
      if (v.real() < -1e-10 * top)
        throw std::invalid_argument("bks_ratio: input operator is not positive semidefinite");
  }
  const CMatrix diff = sub(a.matrix(), b.matrix());
  const double denom =
      spectra::weak_quasi_norm(matops::singular_values(GeneralOperator(diff)), q);
  if (denom == 0.0) return 0.0;
  const CMatrix root_diff = sub(matrix_sqrt_psd(a), matrix_sqrt_psd(b));
  const double numer =
      spectra::weak_quasi_norm(matops::singular_values(GeneralOperator(root_diff)), 2.0 * q);
  return numer / std::sqrt(denom);
}

IntegralReport weyl_to_integral(const spectra::SpectralSequence& seq, const WeylWindow& window,
                                double tauberian_window_fraction, double weyl_tol,
                                double tauberian_tol) {
  IntegralReport rep;
  const auto [ep, em] = weyl_pm(seq, 1.0, window);
  rep.lambda_plus = ep;
  rep.lambda_minus = em;
  rep.integral = ep.value - em.value;
  rep.log_mean = spectra::tauberian_limit(seq, tauberian_window_fraction, tauberian_tol);
  rep.discrepancy = std::abs(rep.integral - rep.log_mean.limit_estimate.real());
  rep.weyl_ok = ep.dispersion <= weyl_tol && em.dispersion <= weyl_tol;
  return rep;
}

IntegralReport weyl_to_integral(const HermitianOperator& a, const WeylWindow& window,
                                double tauberian_window_fraction, double weyl_tol,
                                double tauberian_tol) {
  return weyl_to_integral(matops::hermitian_eig(a), window, tauberian_window_fraction, weyl_tol,
                          tauberian_tol);
}

}  // namespace ncint::weyl
