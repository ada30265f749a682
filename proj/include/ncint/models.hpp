/** \file models.hpp
 *  \brief Model operators with known continuum answers: diagonal families
 *         and flat-torus symbol truncations, plus the residue and
 *         symbol-side quadratures they are compared against.
 *
 *  The torus model realizes f |D|^{-m} (one-sided) or |D|^{-m/2} f |D|^{-m/2}
 *  (symmetrized) in the Fourier basis e^{ik.x} on T^n = (R/2piZ)^n, truncated
 *  to frequencies |k|_inf <= K.  The Laplacian kernel mode k = 0 is projected
 *  out (partial-inverse convention, weight w(0) = 0).
 */

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "ncint/core.hpp"
#include "ncint/spectra.hpp"

namespace ncint::models {

// ---------------------------------------------------------------------------
// Diagonal models
// ---------------------------------------------------------------------------

enum class DiagonalRule { harmonic, power, custom };

struct DiagonalModel {
  DiagonalRule rule = DiagonalRule::harmonic;
  std::size_t length = 0;
  double alpha = 1.0;                 // exponent for rule = power
  std::vector<double> custom_values;  // used for rule = custom
};

/// The model's value list: harmonic (j+1)^{-1}, power (j+1)^{-alpha}, or the
/// custom list (validated nonincreasing in modulus).
std::vector<double> diagonal_values(const DiagonalModel& model);

/// Diagonal matrix carrying diagonal_values(model).
HermitianOperator build_diagonal(const DiagonalModel& model);

/// lambda_j = (j+1)^{-1} (1 + sin(log log (j+2))): bounded log-mean series
/// with no limit; the standard non-Tauberian counterexample.
std::vector<double> oscillating_values(std::size_t length);

// ---------------------------------------------------------------------------
// Torus symbol models
// ---------------------------------------------------------------------------

struct FourierCoeff {
  std::array<int, 2> k{0, 0};  // k[1] ignored when n = 1
  cplx value{0.0, 0.0};
};

struct TorusSymbolModel {
  int n = 1;          // torus dimension, 1 or 2
  double m = 1.0;     // the operator has order -m
  std::size_t cutoff = 0;
  bool symmetrized = true;
  std::vector<FourierCoeff> fhat;

  cplx fhat_at(int kx, int ky = 0) const;
  /// max |k|_inf over nonzero coefficients.
  int support_radius() const;
  /// fhat(-k) == conj(fhat(k)) for every coefficient (f real-valued).
  bool real_symbol() const;
  /// f evaluated pointwise from its Fourier data (real part for real f).
  double symbol_value(double x, double y = 0.0) const;
};

/// Matrix dimension of the truncation: (2K+1)^n.
std::size_t torus_dimension(const TorusSymbolModel& model);

/// The truncated symbol matrix M_{k,k'} = w(k) fhat(k-k') w(k') with
/// w(k) = |k|^{-m/2}, w(0) = 0 (symmetrized), or
/// M_{k,k'} = fhat(k-k') |k'|^{-m} [k' != 0] (one-sided).  Frequencies are
/// enumerated lexicographically from -K to K per axis.  Throws when the
/// cutoff violates the aliasing guard K >= 4 * support_radius.
CMatrix torus_matrix(const TorusSymbolModel& model);

/// Tridiagonal storage (diag, off) of a 1-d symmetrized model whose symbol
/// support radius is at most 1; usable with the tridiagonal eigensolvers at
/// cutoffs far beyond dense reach.
std::pair<std::vector<double>, std::vector<double>> torus_tridiagonal(
    const TorusSymbolModel& model);

/// Eigenvalues of a 1-d symmetrized tridiagonal-representable model, as a
/// modulus-sorted sequence.
spectra::SpectralSequence torus_tridiagonal_spectrum(const TorusSymbolModel& model);

/// Closed-form spectrum of f == 1, n = 1: |k|^{-m} for k != 0 sorted
/// nonincreasing, i.e. values[j] = (floor(j/2)+1)^{-m}.
std::vector<double> closed_form_circle_spectrum(std::size_t length, double m = 1.0);

// ---------------------------------------------------------------------------
// Continuum quadratures
// ---------------------------------------------------------------------------

/// (2pi)^{-n} int_{T^n x S^{n-1}} f(x) dx dxi by trapezoid rule in x
/// (points_per_dim = 0 selects the default 4K) and the exact two-point rule
/// on S^0 or a 360-point uniform rule on S^1.  Requires m = n and real f.
double nc_residue_quadrature(const TorusSymbolModel& model, std::size_t points_per_dim = 0);

/// c_n (2pi)^n fhat(0) with c_n = (1/n)(2pi)^{-n} |S^{n-1}|; the continuum
/// value of the noncommutative integral of f |D|^{-n}.  Requires m = n, f real.
double predicted_connes_integral(const TorusSymbolModel& model);

enum class SymbolMode { abs, plus, minus };

/// [c_n int_{T^n} mode(f)^p dx]^{1/p} where mode selects |f|, f_+ or f_-;
/// the symbol-side right-hand side of the Weyl law for p = n/m.
double symbol_weyl_rhs(const TorusSymbolModel& model, double p, SymbolMode mode,
                       std::size_t points_per_dim = 0);

}  // namespace ncint::models
