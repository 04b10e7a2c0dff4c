#pragma once

// JSON wire formats.
//
//   scalar          {"re1": a, "im1": b, "re2": c, "im2": d}   z1 = a + b i1, z2 = c + d i1
//   ket             {"n": N, "entries": [scalar, ...]}
//   matrix          {"n": N, "rows": [[scalar, ...], ...]}      row-major
//   complex         {"re": a, "im": b}
//   complex matrix  {"n": N, "rows": [[complex, ...], ...]}
//   hyperbolic      {"x1": a, "x2": b}                          a e1 + b e2
//   decomposition   {"eigenvalues": [hyperbolic, ...], "eigenkets": [ket, ...],
//                    "pairing": [[i1, i2], ...], "reconstruction_error": r}
//
// Parsers throw ParseError on malformed or inconsistent input.

#include <string>

#include <json.hpp>

#include "bispec/bicomplex.hpp"
#include "bispec/errors.hpp"
#include "bispec/ket.hpp"
#include "bispec/matrix.hpp"
#include "bispec/spectral.hpp"

namespace bispec {

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace json_io {

using nlohmann::json;

json to_json(const Bicomplex& w);
json to_json(const Complex& z);
json to_json(const Hyperbolic& h);
json to_json(const Ket& psi);
json to_json(const BicomplexMatrix& t);
json to_json(const ComplexMatrix& a);
json to_json(const SpectralDecomposition& d);

Bicomplex bicomplex_from_json(const json& j);
Complex complex_from_json(const json& j);
Hyperbolic hyperbolic_from_json(const json& j);
Ket ket_from_json(const json& j);
BicomplexMatrix matrix_from_json(const json& j);
ComplexMatrix complex_matrix_from_json(const json& j);
SpectralDecomposition decomposition_from_json(const json& j);

/// Parses text, mapping syntax errors to ParseError.
json parse(const std::string& text);
/// Reads and parses a file. Throws ParseError if it cannot be read.
json load_file(const std::string& path);

}  // namespace json_io
}  // namespace bispec
