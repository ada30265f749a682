/** \file test_limits.cpp
 *  \brief Tests for the surrogate limiting procedures (Cesaro means,
 *         dilations) and the combined measurability assessment.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncint/limits.hpp"
#include "ncint/models.hpp"
#include "ncint/spectra.hpp"

using namespace ncint;
using limits::Surrogate;
using limits::SurrogateKind;

namespace {

std::vector<cplx> to_cplx(const std::vector<double>& v) {
  return std::vector<cplx>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("cesaro mean of a short explicit sequence") {
  const std::vector<cplx> a = to_cplx({1.0, 2.0, 3.0, 4.0});
  // Running averages: 1, 1.5, 2, 2.5; the order-1 mean is the last entry.
  CHECK(limits::cesaro_mean(a, 1).real() == doctest::Approx(2.5).epsilon(1e-15));
  // Second pass over (1, 1.5, 2, 2.5): 1, 1.25, 1.5, 1.75.
  CHECK(limits::cesaro_mean(a, 2).real() == doctest::Approx(1.75).epsilon(1e-15));
  CHECK_THROWS_AS((void)limits::cesaro_mean(a, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)limits::cesaro_mean({}, 1), std::invalid_argument);
}

TEST_CASE("dilation value picks the arithmetic subsequence a_{mk}") {
  const std::vector<cplx> a = to_cplx({1, 2, 3, 4, 5, 6, 7, 8});
  // Factor 2: entries a_2, a_4, a_6, a_8 (1-based) = 2, 4, 6, 8.
  CHECK(limits::dilation_value(a, 2).real() == doctest::Approx(5.0).epsilon(1e-15));
  // Factor 3: entries a_3, a_6 = 3, 6.
  CHECK(limits::dilation_value(a, 3).real() == doctest::Approx(4.5).epsilon(1e-15));
  CHECK_THROWS_AS((void)limits::dilation_value(a, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)limits::dilation_value(to_cplx({1.0}), 2), std::invalid_argument);
}

TEST_CASE("surrogate labels and dispatch") {
  CHECK(Surrogate{SurrogateKind::cesaro, 1}.label() == "cesaro-1");
  CHECK(Surrogate{SurrogateKind::dilation, 3}.label() == "dilation-3");
  const std::vector<cplx> a = to_cplx({1, 2, 3, 4, 5, 6});
  CHECK(limits::evaluate({SurrogateKind::cesaro, 1}, a) == limits::cesaro_mean(a, 1));
  CHECK(limits::evaluate({SurrogateKind::dilation, 2}, a) == limits::dilation_value(a, 2));
}

TEST_CASE("default family is cesaro-1, cesaro-2, dilation-2, dilation-3") {
  const limits::SurrogateFamily fam = limits::default_family();
  REQUIRE(fam.size() == 4);
  CHECK(fam[0].label() == "cesaro-1");
  CHECK(fam[1].label() == "cesaro-2");
  CHECK(fam[2].label() == "dilation-2");
  CHECK(fam[3].label() == "dilation-3");
}

TEST_CASE("all surrogates preserve the limit of a convergent series") {
  // a_n = 2 + 5/n converges to 2; every family member must land near 2.
  std::vector<cplx> a(200000);
  for (std::size_t n = 1; n <= a.size(); ++n)
    a[n - 1] = 2.0 + 5.0 / static_cast<double>(n);
  for (const Surrogate& s : limits::default_family()) {
    const cplx v = limits::evaluate(s, a);
    CHECK(std::abs(v - cplx(2.0, 0.0)) < 5e-3);
  }
  CHECK(limits::surrogate_spread(a, limits::default_family()) < 5e-3);
}

TEST_CASE("surrogates are linear") {
  std::vector<cplx> a(5000), b(5000);
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = cplx(std::cos(0.01 * n), std::sin(0.02 * n));
    b[n] = cplx(1.0 / (n + 1.0), 0.3);
  }
  std::vector<cplx> combo(a.size());
  const cplx alpha(2.0, -0.5), beta(0.25, 1.0);
  for (std::size_t n = 0; n < a.size(); ++n) combo[n] = alpha * a[n] + beta * b[n];
  for (const Surrogate& s : limits::default_family()) {
    const cplx lhs = limits::evaluate(s, combo);
    const cplx rhs = alpha * limits::evaluate(s, a) + beta * limits::evaluate(s, b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("spread vanishes on constants and separates an alternating series") {
  const std::vector<cplx> constant(1000, cplx(7.0, -3.0));
  CHECK(limits::surrogate_spread(constant, limits::default_family()) < 1e-13);

  // a_n = (-1)^{n+1} (1-based): dilation-2 sees only -1 while the Cesaro
  // means tend to 0, so the family disagrees by about 1.
  std::vector<cplx> alternating(100000);
  for (std::size_t n = 1; n <= alternating.size(); ++n)
    alternating[n - 1] = (n % 2 == 1) ? 1.0 : -1.0;
  CHECK(limits::dilation_value(alternating, 2).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(limits::cesaro_mean(alternating, 1)) < 1e-4);
  CHECK(limits::surrogate_spread(alternating, limits::default_family()) > 0.9);
}

TEST_CASE("assess_measurability combines the window report with the spread") {
  models::DiagonalModel dm;
  dm.rule = models::DiagonalRule::harmonic;
  dm.length = 100000;
  const spectra::SpectralSequence seq = spectra::sort_sequence(models::diagonal_values(dm));
  const spectra::MeasurabilityReport rep =
      limits::assess_measurability(seq, 0.5, 1e-2, limits::default_family());
  CHECK(rep.converged);
  CHECK(std::abs(rep.limit_estimate.real() - 1.0) < 0.06);
  CHECK(rep.surrogate_spread ==
        doctest::Approx(limits::surrogate_spread(spectra::log_mean_series(seq),
                                                 limits::default_family()))
            .epsilon(1e-14));
  CHECK(rep.surrogate_spread < 1e-2);
}

TEST_CASE("oscillating diagonal model produces a visible surrogate spread") {
  const spectra::SpectralSequence seq =
      spectra::sort_sequence(models::oscillating_values(1000000));
  const double spread =
      limits::surrogate_spread(spectra::log_mean_series(seq), limits::default_family());
  CHECK(spread > 1e-3);
}
