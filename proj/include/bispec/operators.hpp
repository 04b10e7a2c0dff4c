#pragma once

// Bicomplex linear operators on M(2)^n as dense matrices.
//
// Every operator splits as T = T1 e1 + T2 e2 with complex component matrices
// T_k = P_k(T) acting on V_k. Application, composition and adjoints all act
// component-wise, which is what most routines here exploit. Every finite
// matrix is bounded and compact, so compactness has no separate test; a
// component pair of compact operators is what `decompose` returns.
//
// All matrices over M(2) are M(2)-linear. Operators on M' that are only
// C(i1)-linear (commuting with i1 but not with e_k) are not representable.

#include <utility>

#include "bispec/ket.hpp"
#include "bispec/matrix.hpp"

namespace bispec {

struct ComponentMatrices {
  ComplexMatrix first;
  ComplexMatrix second;
};

/// Matrix-vector product over M(2). Throws DimensionError.
Ket apply(const BicomplexMatrix& t, const Ket& psi);

/// Entry-wise P1 and P2.
ComponentMatrices decompose(const BicomplexMatrix& t);

/// first e1 + second e2. Throws DimensionError if orders differ.
BicomplexMatrix recombine(const ComplexMatrix& first, const ComplexMatrix& second);
inline BicomplexMatrix recombine(const ComponentMatrices& c) { return recombine(c.first, c.second); }

/// Entry-wise dagger3 transpose; equals the recombined component conjugate
/// transposes.
BicomplexMatrix adjoint(const BicomplexMatrix& t);

/// Matrix product S T. Throws DimensionError.
BicomplexMatrix compose(const BicomplexMatrix& s, const BicomplexMatrix& t);

/// |psi><phi| with entries psi_i dagger3(phi_j). Throws DimensionError.
BicomplexMatrix outer_product(const Ket& psi, const Ket& phi);

/// Largest singular value of a complex matrix: sqrt of the top eigenvalue of
/// A^H A from the Jacobi solver.
double spectral_norm(const ComplexMatrix& a);

/// sup ||T psi|| over ||psi|| <= 1 in the M(2)-norm, which is the larger of
/// the two component spectral norms.
double operator_norm(const BicomplexMatrix& t);

/// Largest entry modulus.
double max_entry_modulus(const BicomplexMatrix& t);

/// max_ij |(T - T*)_ij| <= tol (1 + ||T||).
bool is_self_adjoint(const BicomplexMatrix& t, double tol);

}  // namespace bispec
