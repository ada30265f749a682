/** \file spectra.hpp
 *  \brief Sequence-space core: eigenvalue sequences, log-means, quasi-norms
 *         and Tauberian diagnostics.
 *
 *  The central object is the logarithmic mean
 *      sigma_N = (log N)^{-1} sum_{j<N} lambda_j,
 *  with the convention sigma_1 = 0.  A sequence is called Tauberian when
 *  sigma_N converges; tauberian_limit estimates the limit from a trailing
 *  window of the series and reports the in-window dispersion so the caller
 *  can judge convergence against a tolerance.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncint/core.hpp"

namespace ncint::spectra {

enum class SequenceKind { eigenvalues, singular_values, signed_positive, signed_negative };

/// Spectral data ordered by nonincreasing modulus.  singular_values and
/// signed_* sequences hold nonnegative reals (signed parts store magnitudes).
struct SpectralSequence {
  std::vector<cplx> values;
  SequenceKind kind = SequenceKind::eigenvalues;

  std::size_t size() const { return values.size(); }
};

/// Convergence diagnostic for a logarithmic mean.  limit_estimate is the
/// window mean of sigma_N, dispersion the max in-window deviation from it.
/// window_lo/window_hi are the N range used (inclusive), length the
/// truncation size the report was computed from.
struct MeasurabilityReport {
  cplx limit_estimate{0.0, 0.0};
  bool converged = false;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  double dispersion = 0.0;
  double surrogate_spread = 0.0;
  std::optional<double> remainder_bound;
  std::size_t length = 0;
};

/// Order a raw multiset of scalars by nonincreasing modulus, breaking ties
/// by nonincreasing real part and then nonincreasing imaginary part.
SpectralSequence sort_sequence(std::vector<cplx> raw,
                               SequenceKind kind = SequenceKind::eigenvalues);

/// Convenience overload for real spectra.
SpectralSequence sort_sequence(const std::vector<double>& raw,
                               SequenceKind kind = SequenceKind::eigenvalues);

/// sigma_N for N = 1..len; sigma_1 = 0.
std::vector<cplx> log_mean_series(const SpectralSequence& seq);

/// sup_j (j+1)^{1/p} values[j] over the available indices.  Requires
/// nonnegative real values.
double weak_quasi_norm(const SpectralSequence& seq, double p);

/// sup_{N>=1} (log(N+1))^{-1} sum_{j<N} values[j] over the available range.
/// Requires nonnegative real values.
double dixmier_macaev_norm(const SpectralSequence& seq);

/// Split a real sequence into positive and negative parts (magnitudes),
/// zeros excluded from both.  Requires real values.
std::pair<SpectralSequence, SpectralSequence> split_signed(const SpectralSequence& seq);

/// Estimate lim sigma_N from the trailing window_fraction of the series.
/// converged holds iff the window dispersion is at most tol.  Throws
/// std::invalid_argument when the sequence is shorter than 16 entries.
MeasurabilityReport tauberian_limit(const SpectralSequence& seq,
                                    double window_fraction = 0.5,
                                    double tol = 1e-2);

/// Same windowed mean/dispersion diagnostic applied to an arbitrary series
/// indexed by N = 1..len (used for series that are not logarithmic means of
/// a single sequence, e.g. combined Re/Im data).
MeasurabilityReport series_report(const std::vector<cplx>& series, double window_fraction,
                                  double tol);

/// sup_{2 <= N <= len} |sum_{j<N} values[j] - L log N|.  Boundedness across
/// increasing truncation lengths witnesses the strong Tauberian property.
double strong_tauberian_remainder(const SpectralSequence& seq, cplx L);

}  // namespace ncint::spectra
