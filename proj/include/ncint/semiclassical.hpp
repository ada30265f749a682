/** \file semiclassical.hpp
 *  \brief Birman-Schwinger machinery: negative-eigenvalue counts of form
 *         sums h^2 H + V, the sandwich inequality at h = 1, and the
 *         semiclassical sweep h^2 N^-(h^2 H - V) converging to the
 *         noncommutative integral of K = H^{-1/2} V H^{-1/2}.
 *
 *  Form sums are plain matrix sums in the truncated basis.  H^{-1/2} is the
 *  partial inverse: eigenvalues below the kernel threshold map to 0.  The
 *  circle model H = |D| with a tridiagonal potential additionally has an
 *  exact banded path (Sturm counts, QL spectra) usable at cutoffs far
 *  beyond dense reach.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "ncint/core.hpp"
#include "ncint/models.hpp"
#include "ncint/spectra.hpp"
#include "ncint/weyl.hpp"

namespace ncint::semiclassical {

/// H positive semidefinite with recorded kernel dimension and spectral gap
/// (smallest nonzero eigenvalue); V a Hermitian form perturbation on the
/// same space.  Built through make(), which validates and measures H.
struct FormPair {
  HermitianOperator h;
  HermitianOperator v;
  std::size_t kernel_dim = 0;
  double gap = 0.0;

  static FormPair make(HermitianOperator h, HermitianOperator v);
};

/// K = H^{-1/2} V H^{-1/2} with the partial inverse of H (kernel threshold
/// 1e-10 * ||H||).  Diagonal H is recognized and handled without an
/// eigensolve.
HermitianOperator birman_schwinger_operator(const FormPair& pair);

/// Number of negative eigenvalues of h^2 H + V; V carries its own sign
/// (pass -V for an attractive well).  Zero threshold 1e-12 * spectral scale.
std::size_t negative_count(const FormPair& pair, double h);

struct SandwichResult {
  std::size_t lower = 0;  // N^-(K; 1)
  std::size_t mid = 0;    // N^-(H + V)
  std::size_t upper = 0;  // lower + dim ker H
  bool holds = false;
};

/// The Birman-Schwinger double inequality at h = 1:
/// N^-(K; 1) <= N^-(H + V) <= N^-(K; 1) + dim ker H.
SandwichResult sandwich_check(const FormPair& pair);

struct SweepPoint {
  double h = 0.0;
  std::size_t count = 0;
  double h2count = 0.0;
  /// Count within the resolution guard N^- <= dim/4; points failing the
  /// guard are reported but excluded from the extrapolation.
  bool guard_ok = false;
};

struct SweepReport {
  std::vector<SweepPoint> points;
  /// Mean h2count over the smallest guard-passing h values.
  double extrapolated = 0.0;
  std::size_t extrapolation_points = 0;
  /// Independent integral of K: Weyl route and Tauberian log-mean route.
  weyl::IntegralReport k_integral;
  /// |extrapolated - k_integral.integral|.
  double discrepancy = 0.0;
};

/// Sweep h over h_list (decreasing) counting N^-(h^2 H - V); requires V
/// positive semidefinite.  The K spectrum side uses the supplied window
/// (resolved_fraction matters for truncation-sourced spectra).
SweepReport semiclassical_sweep(const FormPair& pair, const std::vector<double>& h_list,
                                const weyl::WeylWindow& window = {},
                                std::size_t extrap_points = 3);

/// Circle fast path: H = |D| truncated at potential.cutoff and V the real
/// multiplication symbol of support radius <= 1 described by potential
/// (fhat); counts are exact Sturm/LDL^T inertia values on the tridiagonal
/// h^2 H - V, and the K spectrum comes from the tridiagonal QL solver.
/// potential.m must be 1 (H = |D| has order 1) and potential.symmetrized
/// true; the same model generates K = |D|^{-1/2} V |D|^{-1/2}.
SweepReport circle_sweep(const models::TorusSymbolModel& potential,
                         const std::vector<double>& h_list,
                         const weyl::WeylWindow& window = {}, std::size_t extrap_points = 3);

}  // namespace ncint::semiclassical
