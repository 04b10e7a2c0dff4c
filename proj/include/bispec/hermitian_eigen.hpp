#pragma once

#include <vector>

#include "bispec/matrix.hpp"

namespace bispec {

struct HermitianEigenOptions {
  /// Convergence threshold on off(A) / ||A||_F, and the Hermiticity check
  /// threshold relative to 1 + ||A||_F.
  double tol = 1e-12;
  int max_sweeps = 100;
};

struct ComplexHermitianEigenResult {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Unitary; column n belongs to eigenvalues[n].
  ComplexMatrix eigenvectors;
  /// max_n ||A u_n - lambda_n u_n||_2.
  double residual = 0.0;
  /// Column of the unsorted Jacobi output that became column n. Equal
  /// eigenvalues keep their original relative order.
  std::vector<std::size_t> order;
  /// Off-diagonal Frobenius norm before the first sweep and after each sweep.
  std::vector<double> off_norm_history;
  int sweeps = 0;
};

/// Cyclic Jacobi with complex plane rotations.
///
/// Each rotation annihilates one off-diagonal pair (p, q), first removing the
/// phase of a_pq with a diagonal unitary and then applying the real symmetric
/// Jacobi rotation, so off(A)^2 drops by exactly 2|a_pq|^2 per step. Sweeps
/// stop once off(A) <= tol ||A||_F.
///
/// Throws NotHermitianError if max |a_ij - conj(a_ji)| > tol (1 + ||A||_F),
/// and NoConvergenceError (carrying the residual) after max_sweeps.
ComplexHermitianEigenResult hermitian_eigen(const ComplexMatrix& a,
                                            const HermitianEigenOptions& opts = {});

/// Off-diagonal Frobenius norm.
double off_diagonal_norm(const ComplexMatrix& a);

}  // namespace bispec
