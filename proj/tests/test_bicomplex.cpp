#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bispec/bicomplex.hpp"
#include "bispec/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bispec;
using bispec::testing::Gen;

namespace {

const Bicomplex e1 = Bicomplex::e1();
const Bicomplex e2 = Bicomplex::e2();
const Bicomplex i1 = Bicomplex::i1();
const Bicomplex i2 = Bicomplex::i2();
const Bicomplex j = Bicomplex::j();
const Complex I{0.0, 1.0};

bool close(const Bicomplex& a, const Bicomplex& b, double tol = 1e-14) {
  return modulus(a - b) <= tol;
}

}  // namespace

TEST_CASE("from_standard maps to idempotent components") {
  const Bicomplex w = Bicomplex::from_standard(1.0, 2.0);
  CHECK(w.c1() == Complex(1.0, -2.0));
  CHECK(w.c2() == Complex(1.0, 2.0));

  CHECK(Bicomplex::from_standard(0.0, 1.0) == i2);
  CHECK(i2.c1() == -I);
  CHECK(i2.c2() == I);

  const Bicomplex one = Bicomplex::from_standard(1.0, 0.0);
  CHECK(one.c1() == Complex(1.0));
  CHECK(one.c2() == Complex(1.0));
}

TEST_CASE("named units") {
  CHECK(j == Bicomplex::from_idempotent(1.0, -1.0));
  CHECK(e1 == Bicomplex::from_idempotent(1.0, 0.0));
  CHECK(e2 == Bicomplex::from_idempotent(0.0, 1.0));
  CHECK(i2 == Bicomplex::from_idempotent(-I, I));
  // e1 = (1 + j)/2, e2 = (1 - j)/2
  CHECK(e1 == Bicomplex(0.5) * (Bicomplex::one() + j));
  CHECK(e2 == Bicomplex(0.5) * (Bicomplex::one() - j));
}

TEST_CASE("standard form round trip") {
  Gen gen(11);
  for (int k = 0; k < 1000; ++k) {
    const Complex z1 = gen.complex();
    const Complex z2 = gen.complex();
    const Bicomplex w = Bicomplex::from_standard(z1, z2);
    const double scale = std::abs(z1) + std::abs(z2);
    CHECK(std::abs(w.z1() - z1) <= 4 * std::numeric_limits<double>::epsilon() * scale);
    CHECK(std::abs(w.z2() - z2) <= 4 * std::numeric_limits<double>::epsilon() * scale);
  }
}

TEST_CASE("non-finite input is rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Bicomplex::from_standard(nan, 0.0), InvalidValueError);
  CHECK_THROWS_AS(Bicomplex::from_idempotent(0.0, Complex(0.0, inf)), InvalidValueError);
  CHECK_THROWS_AS(Bicomplex{inf}, InvalidValueError);
}

TEST_CASE("multiplication") {
  CHECK(i1 * i2 == j);
  CHECK(j * j == Bicomplex::one());
  CHECK(e1 * e2 == Bicomplex::zero());
  CHECK(i2 * i2 == Bicomplex(-1.0));
  CHECK(i1 * i1 == Bicomplex(-1.0));
}

TEST_CASE("multiplication agrees with standard-form products") {
  Gen gen(12);
  for (int k = 0; k < 1000; ++k) {
    const Bicomplex a = gen.plain_scalar();
    const Bicomplex b = gen.plain_scalar();
    const auto want = testing::std_mul(testing::standard(a), testing::standard(b));
    CHECK(testing::std_diff(testing::standard(a * b), want) <= 1e-13);
  }
}

TEST_CASE("idempotent identities hold exactly") {
  CHECK(e1 * e1 == e1);
  CHECK(e2 * e2 == e2);
  CHECK(e1 + e2 == Bicomplex::one());
  CHECK(e1 * e2 == Bicomplex::zero());
  CHECK(conj(e1, Conjugation::dagger3) == e1);
  CHECK(conj(e2, Conjugation::dagger3) == e2);
}

TEST_CASE("conjugations") {
  CHECK(conj(i2, Conjugation::dagger3) == -i2);
  CHECK(conj(e1, Conjugation::dagger3) == e1);

  const Bicomplex w = Bicomplex::from_standard(Complex(1.5, -2.0), Complex(0.25, 3.0));
  const Bicomplex w2 = conj(w, Conjugation::dagger2);
  CHECK(std::abs(w2.z1() - Complex(1.5, -2.0)) < 1e-15);
  CHECK(std::abs(w2.z2() - Complex(-0.25, -3.0)) < 1e-15);

  Gen gen(13);
  for (int k = 0; k < 500; ++k) {
    const Bicomplex a = gen.plain_scalar();
    for (Conjugation c : {Conjugation::dagger1, Conjugation::dagger2, Conjugation::dagger3}) {
      CHECK(conj(conj(a, c), c) == a);
      const auto want = testing::std_conj(testing::standard(a), c);
      CHECK(testing::std_diff(testing::standard(conj(a, c)), want) <= 1e-14);
    }
    CHECK(conj(conj(a, Conjugation::dagger3), Conjugation::dagger2) == conj(a, Conjugation::dagger1));
  }
}

TEST_CASE("modulus") {
  CHECK(modulus(Bicomplex::one() + i2) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(modulus(e1) == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
  CHECK(modulus(Bicomplex::zero()) == 0.0);

  Gen gen(14);
  for (int k = 0; k < 1000; ++k) {
    const Bicomplex a = gen.scalar();
    const double want = testing::std_modulus(testing::standard(a));
    CHECK(std::abs(modulus(a) - want) <= 1e-12 * want);
  }
}

TEST_CASE("invert") {
  CHECK(invert(j) == j);
  CHECK_THROWS_AS(invert(e1), NullConeError);
  CHECK_THROWS_AS(invert(Bicomplex::zero()), ZeroDivisionError);
  const Bicomplex w = Bicomplex::from_idempotent(4.0, 2.0);
  CHECK(invert(w) == Bicomplex::from_idempotent(0.25, 0.5));

  SUBCASE("tolerance governs the zero-divisor test") {
    const Bicomplex tiny = Bicomplex::from_idempotent(1.0, 1e-9);
    CHECK_NOTHROW(invert(tiny));
    CHECK_THROWS_AS(invert(tiny, 1e-8), NullConeError);
  }
}

TEST_CASE("in_null_cone") {
  CHECK(in_null_cone(e2));
  CHECK_FALSE(in_null_cone(Bicomplex::one() + i2));
  CHECK(in_null_cone(Bicomplex::one() + i1 * i2));
  CHECK(Bicomplex::one() + i1 * i2 == Bicomplex(2.0) * e1);
  CHECK_FALSE(in_null_cone(Bicomplex::zero()));
  CHECK_THROWS_AS(in_null_cone(j, -1.0), std::invalid_argument);

  SUBCASE("agrees with z1^2 + z2^2 = 0 at zero tolerance") {
    Gen gen(15);
    for (int k = 0; k < 200; ++k) {
      const Bicomplex w = gen.null_cone_scalar();
      const Complex z1 = w.z1();
      const Complex z2 = w.z2();
      CHECK(std::abs(z1 * z1 + z2 * z2) <= 1e-14 * (std::norm(z1) + std::norm(z2)));
      CHECK(in_null_cone(w, 0.0));
    }
  }
}

TEST_CASE("nth_root") {
  const Bicomplex w = Bicomplex::from_idempotent(4.0, 9.0);
  CHECK(close(nth_root(w, 2), Bicomplex::from_idempotent(2.0, 3.0)));
  CHECK(nth_root(j, 1) == j);
  CHECK(close(nth_root(Bicomplex(-1.0), 2), i1));
  CHECK(nth_root(Bicomplex::zero(), 3) == Bicomplex::zero());

  CHECK_THROWS_AS(nth_root(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(nth_root(w, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(nth_root(w, 3, 0, -1), std::invalid_argument);

  SUBCASE("every branch pair is a root") {
    Gen gen(16);
    for (int k = 0; k < 100; ++k) {
      const Bicomplex a = gen.plain_scalar();
      const int n = gen.integer(1, 6);
      for (int b1 = 0; b1 < n; ++b1) {
        for (int b2 = 0; b2 < n; ++b2) {
          CHECK(modulus(power(nth_root(a, n, b1, b2), n) - a) <= 1e-9 * (1.0 + modulus(a)));
        }
      }
    }
  }
}

TEST_CASE("project") {
  CHECK(project(i2, Component::first) == -I);
  CHECK(project(e1, Component::second) == Complex(0.0));
  const Bicomplex s = Bicomplex::one() + i2;
  CHECK(project(s * j, Component::first) == project(s, Component::first) * project(j, Component::first));
}

TEST_CASE("classify") {
  const Bicomplex v = i2 * conj(i2, Conjugation::dagger3);
  CHECK(v == Bicomplex::one());
  CHECK(classify(v, 1e-12) == ScalarClass::hyperbolic_positive);
  CHECK(classify(j, 1e-12) == ScalarClass::hyperbolic);
  CHECK(classify(Bicomplex::from_standard(1.0, 2.0), 1e-12) == ScalarClass::general);
  CHECK(classify(Bicomplex::zero(), 0.0) == ScalarClass::zero);
  CHECK(classify(e1, 1e-12) == ScalarClass::null_cone);
  CHECK(classify(Bicomplex(Complex(1.0, 2.0)), 1e-12) == ScalarClass::complex_i1);
  CHECK(to_string(ScalarClass::hyperbolic_positive) == "hyperbolic_positive");
}

TEST_CASE("hyperbolic numbers") {
  const Hyperbolic h{3.0, -1.0};
  CHECK(h.x() == 1.0);
  CHECK(h.y() == 2.0);
  CHECK(h.to_bicomplex() == Bicomplex(1.0) + Bicomplex(2.0) * j);
  CHECK_FALSE(h.is_positive());
  CHECK(Hyperbolic{0.0, 2.0}.is_positive());
  CHECK(to_hyperbolic(h.to_bicomplex()) == h);
}

TEST_CASE("formatting") {
  CHECK(format_idempotent(Hyperbolic{1.0, -1.0}) == "1 e1 + -1 e2");
  CHECK(format_standard(Hyperbolic{1.0, -1.0}) == "0 + 1 j");
  CHECK(format_standard(i2) == "(0+0 i1) + (1+0 i1) i2");
}
