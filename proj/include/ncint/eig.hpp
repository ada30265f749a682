/** \file eig.hpp
 *  \brief Self-contained Hermitian eigensolvers and tridiagonal kernels.
 *
 *  The primary dense solver is two-sided cyclic Jacobi.  Two variants are
 *  provided: a plain serial reference (jacobi_serial) and an OpenMP
 *  round-robin variant (jacobi_parallel) that applies the n/2 disjoint
 *  rotations of a tournament round in two cache-friendly passes.  Both
 *  produce eigenvalues (and optionally an orthonormal eigenbasis) with the
 *  backward-stability guarantee ||A v - lambda v|| <= 1e-10 ||A||.
 *
 *  Real symmetric input is detected and routed to a real-arithmetic
 *  instantiation of the same kernel (4x fewer flops than complex).
 *
 *  For large eigenvalue-only batches a Householder tridiagonalization
 *  followed by implicit-shift QL is also provided (symmetric_eigenvalues),
 *  along with tridiagonal Sturm/LDL^T inertia counts used by the banded
 *  circle-model pipelines.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "ncint/core.hpp"

namespace ncint::eig {

struct JacobiOptions {
  bool compute_vectors = false;
  /// Stop once the off-diagonal Frobenius mass drops below tol * ||A||_F.
  double tol = 1e-13;
  int max_sweeps = 50;
};

struct EigResult {
  /// Eigenvalues in no particular order (callers sort).
  std::vector<double> values;
  /// Columns are eigenvectors matching values[]; empty unless requested.
  CMatrix vectors;
  int sweeps = 0;
  /// Final off-diagonal Frobenius norm relative to ||A||_F.
  double off_rel = 0.0;
};

/// Reference implementation: textbook cyclic-by-row Jacobi.
EigResult jacobi_serial(const CMatrix& a, const JacobiOptions& opt = {});

/// Round-robin ordered Jacobi; rotation rounds are applied with OpenMP
/// worksharing.  Produces the same spectrum as jacobi_serial to solver
/// tolerance (rotation order differs, so iterates are not bitwise equal).
EigResult jacobi_parallel(const CMatrix& a, const JacobiOptions& opt = {});

/// Dispatch: round-robin variant for large matrices (its two-pass rounds
/// stream the matrix row-major, which wins even single-threaded), plain
/// cyclic order for small ones.
EigResult jacobi_auto(const CMatrix& a, const JacobiOptions& opt = {});

/// Eigenvalues of a real symmetric tridiagonal matrix (implicit-shift QL).
/// diag has length n, off has length n-1.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> off);

/// Number of eigenvalues of the tridiagonal matrix strictly below sigma
/// (Sturm count via the LDL^T recurrence, exact by Sylvester inertia).
std::size_t tridiagonal_count_below(const std::vector<double>& diag,
                                    const std::vector<double>& off,
                                    double sigma);

/// Eigenvalues-only path for real symmetric dense matrices: Householder
/// reduction to tridiagonal form, then QL.  Falls back to Jacobi for
/// complex input.  Used by bulk experiments where the O(n^3) Jacobi
/// constant is prohibitive; cross-checked against Jacobi in the tests.
std::vector<double> symmetric_eigenvalues(const CMatrix& a);

}  // namespace ncint::eig
