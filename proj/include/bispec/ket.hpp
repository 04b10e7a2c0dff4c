#pragma once

// The free module M = M(2)^n with its canonical bicomplex scalar product.
//
// The standard basis of M(2)^n is the module's fixed orthonormal basis; the
// subspace V (kets with C(i1) coefficients) and the ket-level dagger2 are
// defined relative to it.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "bispec/bicomplex.hpp"

namespace bispec {

class Ket {
 public:
  Ket() = default;
  /// Zero ket of length n.
  explicit Ket(std::size_t n) : entries_(n) {}
  explicit Ket(std::vector<Bicomplex> entries) : entries_(std::move(entries)) {}
  Ket(std::initializer_list<Bicomplex> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }

  Bicomplex& operator[](std::size_t i) { return entries_[i]; }
  const Bicomplex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Bicomplex> entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Ket& operator+=(const Ket& o);
  Ket& operator-=(const Ket& o);
  Ket& operator*=(const Bicomplex& w);

  friend Ket operator+(Ket a, const Ket& b) { return a += b; }
  friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
  friend Ket operator*(const Bicomplex& w, Ket a) { return a *= w; }

  friend bool operator==(const Ket&, const Ket&) = default;

 private:
  std::vector<Bicomplex> entries_;
};

/// An element of V_k = e_k M, stored by its complex coefficients.
struct ComponentKet {
  std::vector<Complex> entries;
  Component which = Component::first;

  /// Embeds back into M as e_k * entries.
  Ket to_ket() const;

  friend bool operator==(const ComponentKet&, const ComponentKet&) = default;
};

/// (e1 psi, e2 psi).
std::pair<ComponentKet, ComponentKet> split(const Ket& psi);

/// Inverse of split. Throws DimensionError on length mismatch and
/// std::invalid_argument if the parts are not tagged first/second.
Ket merge(const ComponentKet& part1, const ComponentKet& part2);

/// Standard complex inner product sum conj(u_i) v_i.
Complex complex_inner(std::span<const Complex> u, std::span<const Complex> v);

/// Canonical bicomplex scalar product sum dagger3(psi_i) phi_i, linear in the
/// second slot. Idempotent component k equals the complex inner product of the
/// k-th component kets.
Bicomplex scalar_product(const Ket& psi, const Ket& phi);

/// Scalar product of M viewed as a vector space over C(i1):
/// (P1 + P2)(scalar_product) / 2.
Complex scalar_product_prime(const Ket& psi, const Ket& phi);

/// Scalar product between component kets. Kets from different components
/// are orthogonal, so the result is zero unless both tags agree.
Bicomplex scalar_product(const ComponentKet& psi, const ComponentKet& phi);
Complex scalar_product_prime(const ComponentKet& psi, const ComponentKet& phi);

/// The M(2)-norm sqrt(|psi_1|^2 + |psi_2|^2) / sqrt(2).
double norm(const Ket& psi);

/// Swaps the two idempotent component kets entry-wise.
Ket dagger2_ket(const Ket& psi);

struct HyperbolicPositivity {
  bool holds = false;
  Hyperbolic value;
};

/// Checks that (psi, psi) lies in D+; reports the value.
HyperbolicPositivity check_hyperbolic_positive(const Ket& psi);

/// True when every entry has equal idempotent components, i.e. psi has
/// C(i1) coefficients in the standard basis.
bool in_V(const Ket& psi, double tol = 0.0);

/// {e1 psi - e2 psi} for each ket psi of V; these span the complement of V in
/// the primed product. Throws std::invalid_argument for kets outside V.
std::vector<Ket> orthogonal_complement_V(std::span<const Ket> basis_kets);

}  // namespace bispec
