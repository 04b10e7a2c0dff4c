#include "bispec/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

constexpr Complex kI1{0.0, 1.0};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex a, Complex b) {
  if (!finite(a) || !finite(b)) {
    throw InvalidValueError("bicomplex components must be finite");
  }
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17g i1)", z.real(), z.imag());
  return buf;
}

std::string format_real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Bicomplex::Bicomplex(double x) : Bicomplex(Complex{x, 0.0}) {}

Bicomplex::Bicomplex(Complex z) : c1_(z), c2_(z) { require_finite(z, z); }

Bicomplex Bicomplex::from_idempotent(Complex c1, Complex c2) {
  require_finite(c1, c2);
  return unchecked(c1, c2);
}

Bicomplex Bicomplex::from_standard(Complex z1, Complex z2) {
  require_finite(z1, z2);
  const Complex c1 = z1 - z2 * kI1;
  const Complex c2 = z1 + z2 * kI1;
  require_finite(c1, c2);
  return unchecked(c1, c2);
}

Complex Bicomplex::z1() const { return 0.5 * (c1_ + c2_); }

Complex Bicomplex::z2() const { return (c2_ - c1_) / (2.0 * kI1); }

Bicomplex conj(const Bicomplex& a, Conjugation kind) noexcept {
  switch (kind) {
    case Conjugation::dagger1:
      return Bicomplex::unchecked(std::conj(a.c2_), std::conj(a.c1_));
    case Conjugation::dagger2:
      return Bicomplex::unchecked(a.c2_, a.c1_);
    case Conjugation::dagger3:
      return Bicomplex::unchecked(std::conj(a.c1_), std::conj(a.c2_));
  }
  return a;
}

double modulus(const Bicomplex& a) noexcept {
  return std::hypot(std::abs(a.c1()), std::abs(a.c2())) / std::numbers::sqrt2;
}

double default_null_cone_tol(const Bicomplex& a) noexcept { return 1e-12 * (1.0 + modulus(a)); }

bool in_null_cone(const Bicomplex& a, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("null-cone tolerance must be >= 0");
  if (a.is_zero()) return false;
  return std::min(std::abs(a.c1()), std::abs(a.c2())) <= tol;
}

bool in_null_cone(const Bicomplex& a) { return in_null_cone(a, default_null_cone_tol(a)); }

Bicomplex invert(const Bicomplex& a, double tol) {
  if (a.is_zero()) throw ZeroDivisionError("inverse of bicomplex zero");
  if (in_null_cone(a, tol)) {
    throw NullConeError("bicomplex " + format_idempotent(a) + " is a zero divisor");
  }
  return Bicomplex::from_idempotent(1.0 / a.c1(), 1.0 / a.c2());
}

Bicomplex invert(const Bicomplex& a) { return invert(a, default_null_cone_tol(a)); }

Complex complex_root(Complex z, int n, int branch) {
  if (n < 1) throw std::invalid_argument("root order must be >= 1");
  if (branch < 0 || branch >= n) throw std::invalid_argument("root branch must lie in [0, n)");
  if (n == 1) return z;
  if (z == 0.0) return 0.0;
  const double r = std::pow(std::abs(z), 1.0 / n);
  const double theta = (std::arg(z) + 2.0 * std::numbers::pi * branch) / n;
  return std::polar(r, theta);
}

Bicomplex nth_root(const Bicomplex& a, int n, int branch1, int branch2) {
  return Bicomplex::from_idempotent(complex_root(a.c1(), n, branch1),
                                    complex_root(a.c2(), n, branch2));
}

Bicomplex power(const Bicomplex& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  Bicomplex result = Bicomplex::one();
  for (int i = 0; i < n; ++i) result *= a;
  return result;
}

ScalarClass classify(const Bicomplex& a, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("classification tolerance must be >= 0");
  const Complex c1 = a.c1();
  const Complex c2 = a.c2();
  if (std::abs(c1) <= tol && std::abs(c2) <= tol) return ScalarClass::zero;
  if (std::min(std::abs(c1), std::abs(c2)) <= tol) return ScalarClass::null_cone;
  if (std::abs(c1.imag()) <= tol && std::abs(c2.imag()) <= tol) {
    return (c1.real() >= -tol && c2.real() >= -tol) ? ScalarClass::hyperbolic_positive
                                                   : ScalarClass::hyperbolic;
  }
  if (std::abs(a.z2()) <= tol) return ScalarClass::complex_i1;
  return ScalarClass::general;
}

std::string to_string(ScalarClass c) {
  switch (c) {
    case ScalarClass::zero: return "zero";
    case ScalarClass::null_cone: return "null_cone";
    case ScalarClass::hyperbolic: return "hyperbolic";
    case ScalarClass::hyperbolic_positive: return "hyperbolic_positive";
    case ScalarClass::complex_i1: return "complex_i1";
    case ScalarClass::general: return "general";
  }
  return "unknown";
}

Hyperbolic to_hyperbolic(const Bicomplex& a) { return {a.c1().real(), a.c2().real()}; }

std::string format_standard(const Bicomplex& a) {
  return format_complex(a.z1()) + " + " + format_complex(a.z2()) + " i2";
}

std::string format_idempotent(const Bicomplex& a) {
  return format_complex(a.c1()) + " e1 + " + format_complex(a.c2()) + " e2";
}

std::string format_idempotent(const Hyperbolic& h) {
  return format_real(h.x1) + " e1 + " + format_real(h.x2) + " e2";
}

std::string format_standard(const Hyperbolic& h) {
  return format_real(h.x()) + " + " + format_real(h.y()) + " j";
}

std::ostream& operator<<(std::ostream& os, const Bicomplex& a) { return os << format_idempotent(a); }

}  // namespace bispec
