#include "bispec/ket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("ket length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Ket& Ket::operator+=(const Ket& o) {
  require_same_length(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Ket& Ket::operator-=(const Ket& o) {
  require_same_length(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Ket& Ket::operator*=(const Bicomplex& w) {
  for (auto& x : entries_) x *= w;
  return *this;
}

Ket ComponentKet::to_ket() const {
  std::vector<Bicomplex> out;
  out.reserve(entries.size());
  for (const Complex& z : entries) {
    out.push_back(which == Component::first ? Bicomplex::from_idempotent(z, 0.0)
                                            : Bicomplex::from_idempotent(0.0, z));
  }
  return Ket(std::move(out));
}

std::pair<ComponentKet, ComponentKet> split(const Ket& psi) {
  ComponentKet p1{{}, Component::first};
  ComponentKet p2{{}, Component::second};
  p1.entries.reserve(psi.size());
  p2.entries.reserve(psi.size());
  for (const Bicomplex& w : psi) {
    p1.entries.push_back(w.c1());
    p2.entries.push_back(w.c2());
  }
  return {std::move(p1), std::move(p2)};
}

Ket merge(const ComponentKet& part1, const ComponentKet& part2) {
  if (part1.which != Component::first || part2.which != Component::second) {
    throw std::invalid_argument("merge expects a first and a second component ket");
  }
  require_same_length(part1.entries.size(), part2.entries.size());
  std::vector<Bicomplex> out;
  out.reserve(part1.entries.size());
  for (std::size_t i = 0; i < part1.entries.size(); ++i) {
    out.push_back(Bicomplex::from_idempotent(part1.entries[i], part2.entries[i]));
  }
  return Ket(std::move(out));
}

Complex complex_inner(std::span<const Complex> u, std::span<const Complex> v) {
  require_same_length(u.size(), v.size());
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

Bicomplex scalar_product(const Ket& psi, const Ket& phi) {
  require_same_length(psi.size(), phi.size());
  Bicomplex acc;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    acc += conj(psi[i], Conjugation::dagger3) * phi[i];
  }
  return acc;
}

Complex scalar_product_prime(const Ket& psi, const Ket& phi) {
  const Bicomplex s = scalar_product(psi, phi);
  return 0.5 * (s.c1() + s.c2());
}

Bicomplex scalar_product(const ComponentKet& psi, const ComponentKet& phi) {
  require_same_length(psi.entries.size(), phi.entries.size());
  if (psi.which != phi.which) return Bicomplex::zero();
  const Complex z = complex_inner(psi.entries, phi.entries);
  return psi.which == Component::first ? Bicomplex::from_idempotent(z, 0.0)
                                       : Bicomplex::from_idempotent(0.0, z);
}

Complex scalar_product_prime(const ComponentKet& psi, const ComponentKet& phi) {
  const Bicomplex s = scalar_product(psi, phi);
  return 0.5 * (s.c1() + s.c2());
}

double norm(const Ket& psi) {
  double sq = 0.0;
  for (const Bicomplex& w : psi) sq += std::norm(w.c1()) + std::norm(w.c2());
  return std::sqrt(sq) / std::numbers::sqrt2;
}

Ket dagger2_ket(const Ket& psi) {
  std::vector<Bicomplex> out;
  out.reserve(psi.size());
  for (const Bicomplex& w : psi) out.push_back(conj(w, Conjugation::dagger2));
  return Ket(std::move(out));
}

HyperbolicPositivity check_hyperbolic_positive(const Ket& psi) {
  const Bicomplex s = scalar_product(psi, psi);
  // Component k is a sum of squared magnitudes, so it is real and >= 0 up to
  // rounding in the imaginary part.
  const double tol = 1e-12 * (1.0 + modulus(s));
  const ScalarClass cls = classify(s, tol);
  const bool real_nonneg = std::abs(s.c1().imag()) <= tol && std::abs(s.c2().imag()) <= tol &&
                           s.c1().real() >= -tol && s.c2().real() >= -tol;
  const bool holds = cls == ScalarClass::zero || cls == ScalarClass::hyperbolic_positive ||
                     (cls == ScalarClass::null_cone && real_nonneg);
  return {holds, to_hyperbolic(s)};
}

bool in_V(const Ket& psi, double tol) {
  for (const Bicomplex& w : psi) {
    if (std::abs(w.c1() - w.c2()) > tol) return false;
  }
  return true;
}

std::vector<Ket> orthogonal_complement_V(std::span<const Ket> basis_kets) {
  std::vector<Ket> out;
  out.reserve(basis_kets.size());
  const Bicomplex j = Bicomplex::j();
  for (const Ket& psi : basis_kets) {
    if (!in_V(psi, 1e-12 * (1.0 + norm(psi)))) {
      throw std::invalid_argument("orthogonal_complement_V: ket has non-C(i1) coefficients");
    }
    // e1 psi - e2 psi = j psi
    out.push_back(j * psi);
  }
  return out;
}

}  // namespace bispec
