/** \file weyl.hpp
 *  \brief Weyl-coefficient estimation from finite spectra, the counting
 *         cross-check, perturbation and BKS harnesses, and the bridge from
 *         Weyl coefficients to the noncommutative integral.
 *
 *  Estimates of Lambda = lim j^{1/p} lambda_j are formed as windowed tail
 *  means.  For spectra obtained by truncating an infinite operator, only a
 *  leading fraction of the computed eigenvalues approximates the continuum
 *  sequence; WeylWindow.resolved_fraction restricts all windows to that
 *  resolved prefix.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "ncint/core.hpp"
#include "ncint/matops.hpp"
#include "ncint/spectra.hpp"

namespace ncint::weyl {

/// Tail window inside the resolved prefix of a sequence.  With sequence
/// length L and R = resolved_fraction * L, the window covers indices
/// [floor(lo * R), ceil(hi * R)).  Defaults take the last quarter of the
/// resolved indices and drop the final 5% (truncation-edge contamination).
struct WeylWindow {
  double resolved_fraction = 1.0;
  double lo = 0.75;
  double hi = 0.95;
};

enum class WeylMethod { tail_mean, counting };

struct WeylEstimate {
  double p = 1.0;
  double value = 0.0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;  // exclusive
  double dispersion = 0.0;
  WeylMethod method = WeylMethod::tail_mean;
  /// Set when the input part sequence was empty (value 0 by convention).
  bool empty_part = false;
};

/// Window mean of j^{1/p} values[j]; dispersion is the max in-window
/// deviation from the mean.  Requires nonnegative values and length >= 32.
WeylEstimate weyl_coefficient(const spectra::SpectralSequence& seq, double p,
                              const WeylWindow& window = {});

/// split_signed then weyl_coefficient on each part.  An empty part yields a
/// zero estimate carrying the empty_part flag.
std::pair<WeylEstimate, WeylEstimate> weyl_pm(const spectra::SpectralSequence& seq, double p,
                                              const WeylWindow& window = {});

/// Window mean of lam^p N(lam) on a decreasing grid, reported as the 1/p-th
/// root of the mean.  The default grid is geometric with grid_points values
/// spanning the window's eigenvalue range.
WeylEstimate counting_limit(const spectra::SpectralSequence& seq, double p,
                            const WeylWindow& window = {}, std::size_t grid_points = 200);

/// Same on a caller-supplied decreasing grid; every grid value must stay at
/// or above the resolved-range floor seq[ceil(hi*R) - 1].
WeylEstimate counting_limit(const spectra::SpectralSequence& seq, double p,
                            const std::vector<double>& lam_grid, const WeylWindow& window = {});

/// Per-epsilon record of the Birman-Solomyak perturbation check: the
/// hypothesis tail sup of j^{1/p} lambda_j^pm(A''_eps) against eps, and the
/// deviation of Lambda^pm(A'_eps) from Lambda^pm(A).
struct PerturbationReport {
  std::vector<double> eps;
  std::vector<double> hypothesis_sup;
  std::vector<double> deviation;
  bool hypothesis_ok = false;
  /// Deviations do not increase as eps decreases (within slack).
  bool monotone_trend = false;
  WeylEstimate reference_plus;
  WeylEstimate reference_minus;
};

/// a_prime[i] + a_double[i] must reproduce the same total operator A for
/// every i (checked); eps_list must be decreasing.
PerturbationReport perturbation_check(const std::vector<HermitianOperator>& a_prime,
                                      const std::vector<HermitianOperator>& a_double,
                                      const std::vector<double>& eps_list, double p = 1.0,
                                      const WeylWindow& window = {}, double slack = 1e-2);

/// PSD matrix square root by spectral calculus (negatives clamped to 0).
CMatrix matrix_sqrt_psd(const HermitianOperator& a);

/// ||sqrt(A) - sqrt(B)||_{2q,inf} / sqrt(||A - B||_{q,inf}); 0 when A = B.
double bks_ratio(const HermitianOperator& a, const HermitianOperator& b, double q);

/// Lambda^+ - Lambda^- together with the independent Tauberian log-mean of
/// the same sequence and their discrepancy.
struct IntegralReport {
  WeylEstimate lambda_plus;
  WeylEstimate lambda_minus;
  double integral = 0.0;  // lambda_plus.value - lambda_minus.value
  spectra::MeasurabilityReport log_mean;
  double discrepancy = 0.0;
  /// Both Weyl dispersions at or below weyl_tol (p = 1 Weyl behavior).
  bool weyl_ok = false;
};

IntegralReport weyl_to_integral(const spectra::SpectralSequence& seq,
                                const WeylWindow& window = {},
                                double tauberian_window_fraction = 0.5, double weyl_tol = 0.1,
                                double tauberian_tol = 1e-2);

IntegralReport weyl_to_integral(const HermitianOperator& a, const WeylWindow& window = {},
                                double tauberian_window_fraction = 0.5, double weyl_tol = 0.1,
                                double tauberian_tol = 1e-2);

}  // namespace ncint::weyl
