#include "bispec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bispec/hermitian_eigen.hpp"

namespace bispec {

Ket apply(const BicomplexMatrix& t, const Ket& psi) {
  if (t.size() != psi.size()) throw DimensionError("operator/ket dimension mismatch");
  const std::size_t n = t.size();
  Ket out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bicomplex acc;
    for (std::size_t j = 0; j < n; ++j) acc += t(i, j) * psi[j];
    out[i] = acc;
  }
  return out;
}

ComponentMatrices decompose(const BicomplexMatrix& t) {
  const std::size_t n = t.size();
  ComponentMatrices c{ComplexMatrix(n), ComplexMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c.first(i, j) = t(i, j).c1();
      c.second(i, j) = t(i, j).c2();
    }
  }
  return c;
}

BicomplexMatrix recombine(const ComplexMatrix& first, const ComplexMatrix& second) {
  if (first.size() != second.size()) throw DimensionError("component matrices differ in order");
  const std::size_t n = first.size();
  BicomplexMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t(i, j) = Bicomplex::from_idempotent(first(i, j), second(i, j));
  return t;
}

BicomplexMatrix adjoint(const BicomplexMatrix& t) {
  const std::size_t n = t.size();
  BicomplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = conj(t(i, j), Conjugation::dagger3);
  return out;
}

BicomplexMatrix compose(const BicomplexMatrix& s, const BicomplexMatrix& t) {
  if (s.size() != t.size()) throw DimensionError("operator order mismatch");
  const std::size_t n = s.size();
  BicomplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Bicomplex sik = s(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += sik * t(k, j);
    }
  }
  return out;
}

BicomplexMatrix outer_product(const Ket& psi, const Ket& phi) {
  if (psi.size() != phi.size()) throw DimensionError("outer product of kets of different length");
  const std::size_t n = psi.size();
  BicomplexMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Bicomplex bra = conj(phi[j], Conjugation::dagger3);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = psi[i] * bra;
  }
  return out;
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  const ComplexMatrix gram = hermitian_part(multiply(conj_transpose(a), a));
  const auto eig = hermitian_eigen(gram);
  return std::sqrt(std::max(0.0, eig.eigenvalues.back()));
}

double operator_norm(const BicomplexMatrix& t) {
  const ComponentMatrices c = decompose(t);
  return std::max(spectral_norm(c.first), spectral_norm(c.second));
}

double max_entry_modulus(const BicomplexMatrix& t) {
  double worst = 0.0;
  for (const Bicomplex& w : t.data()) worst = std::max(worst, modulus(w));
  return worst;
}

bool is_self_adjoint(const BicomplexMatrix& t, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("self-adjointness tolerance must be >= 0");
  const std::size_t n = t.size();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      defect = std::max(defect, modulus(t(i, j) - conj(t(j, i), Conjugation::dagger3)));
  if (defect == 0.0) return true;
  return defect <= tol * (1.0 + operator_norm(t));
}

}  // namespace bispec
