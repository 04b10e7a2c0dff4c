#pragma once

// Bicomplex numbers M(2) = { z1 + z2 i2 : z1, z2 in C(i1) }.
//
// Values are stored in the idempotent basis e1 = (1+j)/2, e2 = (1-j)/2 as a
// pair of complex components (c1, c2). Every ring operation is then
// component-wise complex arithmetic. The standard form (z1, z2) is a view
// computed on demand:
//
//   c1 = z1 - z2 i1,    c2 = z1 + z2 i1
//   z1 = (c1 + c2)/2,   z2 = (c2 - c1)/(2 i1)

#include <complex>
#include <iosfwd>
#include <string>

namespace bispec {

using Complex = std::complex<double>;

/// Selects one of the two idempotent components.
enum class Component : int { first = 1, second = 2 };

/// The three involutions of M(2).
///   dagger1: z1 + z2 i2 -> conj(z1) + conj(z2) i2   (swap and conjugate components)
///   dagger2: z1 + z2 i2 -> z1 - z2 i2               (swap components)
///   dagger3: z1 + z2 i2 -> conj(z1) - conj(z2) i2   (conjugate components)
enum class Conjugation { dagger1, dagger2, dagger3 };

class Bicomplex {
 public:
  constexpr Bicomplex() = default;

  /// Real scalar x, i.e. x e1 + x e2.
  Bicomplex(double x);  // NOLINT(google-explicit-constructor)

  /// Complex scalar z in C(i1), i.e. z e1 + z e2.
  Bicomplex(Complex z);  // NOLINT(google-explicit-constructor)

  /// Builds c1 e1 + c2 e2. Throws InvalidValueError on non-finite input.
  static Bicomplex from_idempotent(Complex c1, Complex c2);

  /// Builds z1 + z2 i2. Throws InvalidValueError on non-finite input.
  static Bicomplex from_standard(Complex z1, Complex z2);

  static Bicomplex zero() { return {}; }
  static Bicomplex one() { return Bicomplex(1.0); }
  static Bicomplex e1() { return unchecked({1.0, 0.0}, {0.0, 0.0}); }
  static Bicomplex e2() { return unchecked({0.0, 0.0}, {1.0, 0.0}); }
  static Bicomplex i1() { return unchecked({0.0, 1.0}, {0.0, 1.0}); }
  static Bicomplex i2() { return unchecked({0.0, -1.0}, {0.0, 1.0}); }
  static Bicomplex j() { return unchecked({1.0, 0.0}, {-1.0, 0.0}); }

  Complex c1() const noexcept { return c1_; }
  Complex c2() const noexcept { return c2_; }
  Complex component(Component k) const noexcept {
    return k == Component::first ? c1_ : c2_;
  }

  /// Standard-form coordinates.
  Complex z1() const;
  Complex z2() const;

  bool is_zero() const noexcept { return c1_ == 0.0 && c2_ == 0.0; }

  Bicomplex& operator+=(const Bicomplex& o) noexcept {
    c1_ += o.c1_;
    c2_ += o.c2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) noexcept {
    c1_ -= o.c1_;
    c2_ -= o.c2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) noexcept {
    c1_ *= o.c1_;
    c2_ *= o.c2_;
    return *this;
  }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) noexcept { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) noexcept { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) noexcept { return a *= b; }
  friend Bicomplex operator-(const Bicomplex& a) noexcept {
    return unchecked(-a.c1_, -a.c2_);
  }

  /// Exact component equality.
  friend bool operator==(const Bicomplex& a, const Bicomplex& b) noexcept {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_;
  }

 private:
  static Bicomplex unchecked(Complex c1, Complex c2) noexcept {
    Bicomplex w;
    w.c1_ = c1;
    w.c2_ = c2;
    return w;
  }

  friend Bicomplex conj(const Bicomplex&, Conjugation) noexcept;

  Complex c1_{0.0, 0.0};
  Complex c2_{0.0, 0.0};
};

/// A hyperbolic number x + y j = x1 e1 + x2 e2 with real components.
struct Hyperbolic {
  double x1 = 0.0;
  double x2 = 0.0;

  /// Standard-form coordinates x + y j.
  double x() const noexcept { return 0.5 * (x1 + x2); }
  double y() const noexcept { return 0.5 * (x1 - x2); }

  Bicomplex to_bicomplex() const { return Bicomplex::from_idempotent(x1, x2); }

  /// Membership in D+ (both idempotent components nonnegative).
  bool is_positive() const noexcept { return x1 >= 0.0 && x2 >= 0.0; }

  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

Bicomplex conj(const Bicomplex& a, Conjugation kind) noexcept;

/// Euclidean modulus |w| = sqrt(|c1|^2 + |c2|^2) / sqrt(2) = sqrt(|z1|^2 + |z2|^2).
double modulus(const Bicomplex& a) noexcept;

/// Default zero-divisor tolerance 1e-12 * (1 + |w|).
double default_null_cone_tol(const Bicomplex& a) noexcept;

/// True iff a != 0 and one idempotent component has magnitude <= tol.
bool in_null_cone(const Bicomplex& a, double tol);
bool in_null_cone(const Bicomplex& a);

/// Component-wise reciprocal.
/// Throws ZeroDivisionError for a == 0 and NullConeError when a nonzero
/// component magnitude is <= tol.
Bicomplex invert(const Bicomplex& a, double tol);
Bicomplex invert(const Bicomplex& a);

/// The complex n-th root of z on branch `branch` (0 is principal):
/// |z|^(1/n) * exp(i (arg z + 2 pi branch) / n).
Complex complex_root(Complex z, int n, int branch);

/// n-th root assembled from one complex root per idempotent component.
/// Requires n >= 1 and branch indices in [0, n); throws std::invalid_argument
/// otherwise.
Bicomplex nth_root(const Bicomplex& a, int n, int branch1 = 0, int branch2 = 0);

/// Repeated multiplication, n >= 0.
Bicomplex power(const Bicomplex& a, int n);

/// The projector P_k : M(2) -> C(i1).
inline Complex project(const Bicomplex& a, Component k) noexcept { return a.component(k); }

enum class ScalarClass {
  zero,
  null_cone,
  hyperbolic,
  hyperbolic_positive,
  complex_i1,
  general,
};

/// Most specific class of `a`, testing in the order zero, null_cone,
/// hyperbolic_positive, hyperbolic, complex_i1, general. Comparisons use an
/// absolute tolerance.
ScalarClass classify(const Bicomplex& a, double tol);

std::string to_string(ScalarClass c);

/// Real parts of the two idempotent components. Callers decide via
/// classify() whether the dropped imaginary parts were negligible.
Hyperbolic to_hyperbolic(const Bicomplex& a);

/// "z1 + z2 i2" with z1, z2 written as (re+im i1).
std::string format_standard(const Bicomplex& a);
/// "c1 e1 + c2 e2".
std::string format_idempotent(const Bicomplex& a);
/// "x1 e1 + x2 e2".
std::string format_idempotent(const Hyperbolic& h);
/// "x + y j".
std::string format_standard(const Hyperbolic& h);

std::ostream& operator<<(std::ostream& os, const Bicomplex& a);

}  // namespace bispec
