/** \file limits.hpp
 *  \brief Surrogate averaging functionals standing in for extended limits.
 *
 *  True extended limits are not finitely computable; these surrogates
 *  (iterated Cesaro means and dilation means) agree with the limit on any
 *  convergent sequence, so a spread of surrogate values near zero is the
 *  finite witness that a logarithmic mean series behaves Tauberian, and a
 *  visible spread flags the opposite.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncint/spectra.hpp"

namespace ncint::limits {

enum class SurrogateKind { cesaro, dilation };

struct Surrogate {
  SurrogateKind kind = SurrogateKind::cesaro;
  /// Cesaro: iteration order (>= 1).  Dilation: subsequence factor (>= 2).
  std::size_t parameter = 1;

  std::string label() const;
};

using SurrogateFamily = std::vector<Surrogate>;

/// {cesaro 1, cesaro 2, dilation 2, dilation 3}.
SurrogateFamily default_family();

/// Apply the running-average operator `order` times and return the final
/// entry of the transformed sequence.
cplx cesaro_mean(const std::vector<cplx>& a, std::size_t order);

/// Cesaro mean (order 1) of the subsequence a_m, a_2m, ... (1-based).
/// Throws when the sequence is shorter than the factor.
cplx dilation_value(const std::vector<cplx>& a, std::size_t factor);

/// Evaluate one surrogate.
cplx evaluate(const Surrogate& s, const std::vector<cplx>& a);

/// Max pairwise absolute difference of the family values on a.
double surrogate_spread(const std::vector<cplx>& a, const SurrogateFamily& family);

/// tauberian_limit plus the surrogate spread of the log-mean series,
/// combined into one report.
spectra::MeasurabilityReport assess_measurability(const spectra::SpectralSequence& seq,
                                                  double window_fraction, double tol,
                                                  const SurrogateFamily& family);

}  // namespace ncint::limits
