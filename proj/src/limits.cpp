#include "ncint/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace ncint::limits {

std::string Surrogate::label() const {
  const char* base = (kind == SurrogateKind::cesaro) ? "cesaro" : "dilation";
  return std::string(base) + "-" + std::to_string(parameter);
}

SurrogateFamily default_family() {
  return {{SurrogateKind::cesaro, 1},
          {SurrogateKind::cesaro, 2},
          {SurrogateKind::dilation, 2},
          {SurrogateKind::dilation, 3}};
}

cplx cesaro_mean(const std::vector<cplx>& a, std::size_t order) {
  if (a.empty()) throw std::invalid_argument("cesaro_mean: empty sequence");
  if (order == 0) throw std::invalid_argument("cesaro_mean: order must be positive");
  std::vector<cplx> b = a;
  for (std::size_t pass = 0; pass < order; ++pass) {
    cplx partial(0.0, 0.0);
    for (std::size_t n = 0; n < b.size(); ++n) {
      partial += b[n];
      b[n] = partial / static_cast<double>(n + 1);
    }
  }
  return b.back();
}

cplx dilation_value(const std::vector<cplx>& a, std::size_t factor) {
  if (factor < 2) throw std::invalid_argument("dilation_value: factor must be at least 2");
  if (a.size() < factor)
    throw std::invalid_argument("dilation_value: sequence shorter than the dilation factor");
  cplx sum(0.0, 0.0);
  std::size_t count = 0;
  for (std::size_t i = factor - 1; i < a.size(); i += factor) {
    sum += a[i];
    ++count;
  }
  return sum / static_cast<double>(count);
}

cplx evaluate(const Surrogate& s, const std::vector<cplx>& a) {
  switch (s.kind) {
    case SurrogateKind::cesaro:
      return cesaro_mean(a, s.parameter);
    case SurrogateKind::dilation:
      return dilation_value(a, s.parameter);
  }
  throw std::logic_error("evaluate: unknown surrogate kind");
}

double surrogate_spread(const std::vector<cplx>& a, const SurrogateFamily& family) {
  if (family.empty()) throw std::invalid_argument("surrogate_spread: empty family");
  std::vector<cplx> vals;
  vals.reserve(family.size());
  for (const Surrogate& s : family) vals.push_back(evaluate(s, a));
  double spread = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      spread = std::max(spread, std::abs(vals[i] - vals[j]));
  return spread;
}

spectra::MeasurabilityReport assess_measurability(const spectra::SpectralSequence& seq,
                                                  double window_fraction, double tol,
                                                  const SurrogateFamily& family) {
  spectra::MeasurabilityReport rep = spectra::tauberian_limit(seq, window_fraction, tol);
  rep.surrogate_spread = surrogate_spread(spectra::log_mean_series(seq), family);
  return rep;
}

}  // namespace ncint::limits
