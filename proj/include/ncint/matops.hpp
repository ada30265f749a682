/** \file matops.hpp
 *  \brief Dense operator backend: eigendecomposition, singular values,
 *         positive/negative parts, counting functions, pushforward and the
 *         additivity/commutator diagnostics.
 *
 *  Eigenvalue sequences are only computed for Hermitian operators; general
 *  operators are handled through their Hermitian real and imaginary parts.
 *  Non-normal spectra are out of scope (no nonsymmetric QR pipeline).
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ncint/core.hpp"
#include "ncint/eig.hpp"
#include "ncint/spectra.hpp"

namespace ncint::matops {

/// All real eigenvalues, ordered by nonincreasing modulus.
spectra::SpectralSequence hermitian_eig(const HermitianOperator& a);

/// Full decomposition (eigenvalues unsorted, eigenvectors as columns).
eig::EigResult hermitian_eig_full(const HermitianOperator& a);

/// Singular values mu_j(A): eigenvalues of sqrt(A*A), nonincreasing,
/// negatives clamped to zero before the square root.
spectra::SpectralSequence singular_values(const GeneralOperator& a);

/// Largest singular value.
double operator_norm(const CMatrix& a);

/// A = plus - minus with both parts positive semidefinite and
/// plus * minus vanishing to eigensolver accuracy.
std::pair<HermitianOperator, HermitianOperator> positive_negative_parts(
    const HermitianOperator& a);

/// Hermitian real and imaginary parts: A = Re + i Im.
std::pair<HermitianOperator, HermitianOperator> re_im_parts(const GeneralOperator& a);

enum class SpectralSign { plus, minus };

/// N^{+-}(A; lam) = #{ j : lambda_j^{+-}(A) > lam }, exact on the computed
/// spectrum.  Requires lam > 0.
std::size_t counting_function(const HermitianOperator& a, double lam, SpectralSign sign);

/// Same count evaluated directly on a signed-part sequence (magnitudes).
std::size_t counting_function(const spectra::SpectralSequence& part, double lam);

/// iota_* A: extend A by zero off the range of the embedding, i.e.
/// iota o A o (iota^{-1} o pi) with pi the orthogonal projection onto
/// range(iota).  Nonzero spectrum of the result equals that of A.
GeneralOperator pushforward(const GeneralOperator& a, const Embedding& iota);

/// |sum_{j<N} lambda_j(A+B) - sum_{j<N} lambda_j(A) - sum_{j<N} lambda_j(B)|
/// for every N in n_range (sequences ordered by nonincreasing modulus).
std::vector<double> additivity_residual(const HermitianOperator& a, const HermitianOperator& b,
                                        const std::vector<std::size_t>& n_range);

/// Log-mean diagnostic of the commutator [T, A] = TA - AT through its
/// Hermitian real/imaginary parts; the limit estimate is expected near 0.
spectra::MeasurabilityReport commutator_logmean(const GeneralOperator& t,
                                                const GeneralOperator& a,
                                                double window_fraction = 0.5, double tol = 1e-2);

/// sum_i w_i A_i for a finite weighted family on a common space.
GeneralOperator family_mean(const std::vector<std::pair<double, GeneralOperator>>& family);

/// Combined log-mean series of a general operator through its Hermitian
/// parts: sigma_N(Re) + i sigma_N(Im).
std::vector<cplx> re_im_log_mean_series(const GeneralOperator& a);

}  // namespace ncint::matops
