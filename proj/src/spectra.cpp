#include "ncint/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncint::spectra {

namespace {

bool modulus_order(const cplx& a, const cplx& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

void require_nonnegative_real(const SpectralSequence& seq, const char* op) {
  for (const cplx& v : seq.values)
    if (v.imag() != 0.0 || v.real() < 0.0)
      throw std::invalid_argument(std::string(op) + ": sequence must be nonnegative real");
}

void require_real(const SpectralSequence& seq, const char* op) {
  for (const cplx& v : seq.values)
    if (v.imag() != 0.0)
      throw std::invalid_argument(std::string(op) + ": sequence must be real");
}

}  // namespace

SpectralSequence sort_sequence(std::vector<cplx> raw, SequenceKind kind) {
  std::sort(raw.begin(), raw.end(), modulus_order);
  return SpectralSequence{std::move(raw), kind};
}

SpectralSequence sort_sequence(const std::vector<double>& raw, SequenceKind kind) {
  std::vector<cplx> v(raw.begin(), raw.end());
  return sort_sequence(std::move(v), kind);
}

std::vector<cplx> log_mean_series(const SpectralSequence& seq) {
  if (seq.values.empty()) throw std::invalid_argument("log_mean_series: empty sequence");
  std::vector<cplx> sigma(seq.values.size());
  cplx partial(0.0, 0.0);
  for (std::size_t n = 1; n <= seq.values.size(); ++n) {
    partial += seq.values[n - 1];
    sigma[n - 1] = (n == 1) ? cplx(0.0, 0.0) : partial / std::log(static_cast<double>(n));
  }
  return sigma;
}

double weak_quasi_norm(const SpectralSequence& seq, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("weak_quasi_norm: p must be positive");
  require_nonnegative_real(seq, "weak_quasi_norm");
  double best = 0.0;
  for (std::size_t j = 0; j < seq.values.size(); ++j)
    best = std::max(best, std::pow(static_cast<double>(j + 1), 1.0 / p) * seq.values[j].real());
  return best;
}

double dixmier_macaev_norm(const SpectralSequence& seq) {
  require_nonnegative_real(seq, "dixmier_macaev_norm");
  double best = 0.0;
  double partial = 0.0;
  for (std::size_t n = 1; n <= seq.values.size(); ++n) {
    partial += seq.values[n - 1].real();
    best = std::max(best, partial / std::log(static_cast<double>(n + 1)));
  }
  return best;
}

std::pair<SpectralSequence, SpectralSequence> split_signed(const SpectralSequence& seq) {
  require_real(seq, "split_signed");
  SpectralSequence plus{{}, SequenceKind::signed_positive};
  SpectralSequence minus{{}, SequenceKind::signed_negative};
  // The input is modulus-ordered, so filtering preserves the nonincreasing
  // order of each part.
  for (const cplx& v : seq.values) {
    if (v.real() > 0.0)
      plus.values.push_back(cplx(v.real(), 0.0));
    else if (v.real() < 0.0)
      minus.values.push_back(cplx(-v.real(), 0.0));
  }
  return {std::move(plus), std::move(minus)};
}

MeasurabilityReport series_report(const std::vector<cplx>& series, double window_fraction,
                                  double tol) {
  const std::size_t len = series.size();
  if (len == 0) throw std::invalid_argument("series_report: empty series");
  if (!(window_fraction > 0.0) || window_fraction > 1.0)
    throw std::invalid_argument("series_report: window_fraction must lie in (0,1]");
  if (!(tol > 0.0)) throw std::invalid_argument("series_report: tol must be positive");

  const std::size_t count =
      std::max<std::size_t>(1, static_cast<std::size_t>(window_fraction * static_cast<double>(len)));
  const std::size_t first_n = len - count + 1;  // window covers N = first_n..len

  cplx mean(0.0, 0.0);
  for (std::size_t n = first_n; n <= len; ++n) mean += series[n - 1];
  mean /= static_cast<double>(count);

  double disp = 0.0;
  for (std::size_t n = first_n; n <= len; ++n)
    disp = std::max(disp, std::abs(series[n - 1] - mean));

  MeasurabilityReport rep;
  rep.limit_estimate = mean;
  rep.dispersion = disp;
  rep.converged = disp <= tol;
  rep.window_lo = first_n;
  rep.window_hi = len;
  rep.length = len;
  return rep;
}

MeasurabilityReport tauberian_limit(const SpectralSequence& seq, double window_fraction,
                                    double tol) {
  if (seq.values.size() < 16)
    throw std::invalid_argument("tauberian_limit: need at least 16 entries");
  return series_report(log_mean_series(seq), window_fraction, tol);
}

double strong_tauberian_remainder(const SpectralSequence& seq, cplx L) {
  if (seq.values.empty())
    throw std::invalid_argument("strong_tauberian_remainder: empty sequence");
  double sup = 0.0;
  cplx partial = seq.values[0];
  for (std::size_t n = 2; n <= seq.values.size(); ++n) {
    partial += seq.values[n - 1];
    sup = std::max(sup, std::abs(partial - L * std::log(static_cast<double>(n))));
  }
  return sup;
}

}  // namespace ncint::spectra
