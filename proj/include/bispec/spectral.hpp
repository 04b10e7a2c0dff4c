#pragma once

// Spectral decomposition of self-adjoint bicomplex operators.
//
// A self-adjoint T has Hermitian components T1, T2. Each is diagonalised on
// its own; eigenpairs are then matched by ascending index, so that
//
//   lambda_n = lambda_{n,1} e1 + lambda_{n,2} e2,
//   psi_n    = e1 u_{n,1} + e2 u_{n,2},
//   T        = sum_n lambda_n |psi_n><psi_n|.
//
// Any bijection between the two component eigenbases would also reconstruct
// T, since e1 e2 = 0 kills every cross term. Index pairing keeps results
// deterministic and is recorded in `pairing`.

#include <cstddef>
#include <vector>

#include "bispec/hermitian_eigen.hpp"
#include "bispec/ket.hpp"
#include "bispec/operators.hpp"

namespace bispec {

struct SpectralOptions {
  /// Self-adjointness tolerance (relative to 1 + ||T||) and Jacobi tolerance.
  double tol = 1e-12;
  int max_sweeps = 100;
  /// Run the two component eigensolves on separate threads for n >= 32.
  bool parallel = true;
};

/// Jacobi output columns (before sorting) that were paired into one eigenket.
struct EigenPairing {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const EigenPairing&, const EigenPairing&) = default;
};

struct SpectralDecomposition {
  std::vector<Hyperbolic> eigenvalues;
  std::vector<Ket> eigenkets;
  std::vector<EigenPairing> pairing;
  /// max_ij modulus of (T - sum lambda_n |psi_n><psi_n|)_ij.
  double reconstruction_error = 0.0;
};

/// Throws NotSelfAdjointError, or NoConvergenceError from either component.
SpectralDecomposition bicomplex_spectral(const BicomplexMatrix& t, const SpectralOptions& opts = {});

/// sum_n lambda_n |psi_n><psi_n|.
BicomplexMatrix reconstruct(const SpectralDecomposition& d);

/// Indices n whose eigenvalue lies in the null cone at tolerance `tol`.
/// T is invertible exactly when this is empty.
std::vector<std::size_t> null_cone_eigenvalues(const SpectralDecomposition& d, double tol);

struct CompactDemoRow {
  std::size_t truncation = 0;
  /// ||tail|| with the tail starting at index truncation + 1.
  double tail_norm = 0.0;
  /// Largest idempotent-component error of the recovered eigenvalues.
  double eigenvalue_error = 0.0;
};

/// Truncations n = 1..n_max of the diagonal operator
/// lambda_k = k^{-p} e1 + k^{-q} e2, k = 1, 2, ...
/// For each n the leading n x n block is decomposed and its eigenvalues
/// compared with the constructed ones; the discarded tail's operator norm is
/// measured on the diagonal block k = n+1..2n+1.
///
/// Throws std::invalid_argument unless n_max >= 2 and p, q > 0.
std::vector<CompactDemoRow> compact_diagonal_demo(std::size_t n_max, double p, double q,
                                                  const SpectralOptions& opts = {});

}  // namespace bispec
