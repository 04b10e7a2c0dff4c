#include <doctest.h>

#include <cmath>
#include <limits>

#include "bispec/json_io.hpp"
#include "support/generators.hpp"

using namespace bispec;
using namespace bispec::json_io;
using bispec::testing::Gen;

TEST_CASE("scalar encoding is standard form") {
  const json j = to_json(Bicomplex::i2());
  CHECK(j == json{{"re1", 0.0}, {"im1", 0.0}, {"re2", 1.0}, {"im2", 0.0}});
  CHECK(bicomplex_from_json(json{{"re1", 0}, {"im1", 0}, {"re2", 0}, {"im2", 1}}) == Bicomplex::j());
  CHECK(bicomplex_from_json(json{{"re1", 2.5}, {"im1", 0}, {"re2", 0}, {"im2", -0.5}}) ==
        Bicomplex::from_idempotent(2.0, 3.0));
}

TEST_CASE("round trips stay within rounding of the standard-form view") {
  Gen gen(61);
  for (int k = 0; k < 200; ++k) {
    const Bicomplex w = gen.scalar();
    const Bicomplex back = bicomplex_from_json(parse(to_json(w).dump()));
    CHECK(modulus(back - w) <= 4 * std::numeric_limits<double>::epsilon() * modulus(w));
  }
  const Ket psi = gen.ket(5);
  const Ket psi_back = ket_from_json(parse(to_json(psi).dump()));
  CHECK(testing::max_diff(psi, psi_back) <= 1e-15 * (1.0 + norm(psi)));

  const BicomplexMatrix t = gen.matrix(4);
  CHECK(testing::max_diff(matrix_from_json(parse(to_json(t).dump())), t) <= 1e-14);

  const ComplexMatrix a = gen.complex_matrix(3);
  CHECK(complex_matrix_from_json(parse(to_json(a).dump())) == a);

  const auto d = bicomplex_spectral(gen.self_adjoint(4));
  const auto d_back = decomposition_from_json(parse(to_json(d).dump()));
  CHECK(d_back.eigenvalues == d.eigenvalues);
  CHECK(d_back.pairing == d.pairing);
  CHECK(d_back.reconstruction_error == d.reconstruction_error);
  for (std::size_t i = 0; i < 4; ++i) CHECK(testing::max_diff(d_back.eigenkets[i], d.eigenkets[i]) <= 1e-15);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("{\"n\": "), ParseError);
  CHECK_THROWS_AS(bicomplex_from_json(json{{"re1", 1}}), ParseError);
  CHECK_THROWS_AS(bicomplex_from_json(json{{"re1", "1"}, {"im1", 0}, {"re2", 0}, {"im2", 0}}), ParseError);
  CHECK_THROWS_AS(bicomplex_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(bicomplex_from_json(json{{"re1", 1e308}, {"im1", 0}, {"re2", 0}, {"im2", 1e308}}), ParseError);

  const json scalar = to_json(Bicomplex::one());
  CHECK_THROWS_AS(matrix_from_json(json{{"n", 2}, {"rows", {{scalar, scalar}}}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json{{"n", 1}, {"rows", {{scalar, scalar}}}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json{{"n", 0}, {"rows", json::array()}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json{{"n", -1}, {"rows", json::array()}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", {{scalar}}}}), ParseError);
  CHECK_THROWS_AS(ket_from_json(json{{"n", 2}, {"entries", {scalar}}}), ParseError);
  CHECK_THROWS_AS(load_file("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(decomposition_from_json(json{{"eigenvalues", json::array()}}), ParseError);
}
