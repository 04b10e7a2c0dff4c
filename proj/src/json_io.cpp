#include "bispec/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bispec::json_io {

namespace {

double number(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!it->is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return it->get<double>();
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t order(const json& obj) {
  const json& n = field(obj, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
    throw ParseError("field \"n\" must be a positive integer");
  }
  return n.get<std::size_t>();
}

const json& array(const json& obj, const char* key, std::size_t expected) {
  const json& a = field(obj, key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  if (a.size() != expected) {
    throw ParseError(std::string("field \"") + key + "\" has " + std::to_string(a.size()) +
                     " elements, expected " + std::to_string(expected));
  }
  return a;
}

template <typename T, typename ParseEntry>
SquareMatrix<T> square_from_json(const json& j, ParseEntry parse_entry) {
  const std::size_t n = order(j);
  const json& rows = array(j, "rows", n);
  SquareMatrix<T> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ParseError("row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(rows[r][c]);
  }
  return m;
}

}  // namespace

json to_json(const Bicomplex& w) {
  const Complex z1 = w.z1();
  const Complex z2 = w.z2();
  return {{"re1", z1.real()}, {"im1", z1.imag()}, {"re2", z2.real()}, {"im2", z2.imag()}};
}

json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Hyperbolic& h) { return {{"x1", h.x1}, {"x2", h.x2}}; }

json to_json(const Ket& psi) {
  json entries = json::array();
  for (const Bicomplex& w : psi) entries.push_back(to_json(w));
  return {{"n", psi.size()}, {"entries", std::move(entries)}};
}

json to_json(const BicomplexMatrix& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (const Bicomplex& w : t.row(i)) row.push_back(to_json(w));
    rows.push_back(std::move(row));
  }
  return {{"n", t.size()}, {"rows", std::move(rows)}};
}

json to_json(const ComplexMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (const Complex& z : a.row(i)) row.push_back(to_json(z));
    rows.push_back(std::move(row));
  }
  return {{"n", a.size()}, {"rows", std::move(rows)}};
}

json to_json(const SpectralDecomposition& d) {
  json eigenvalues = json::array();
  for (const Hyperbolic& h : d.eigenvalues) eigenvalues.push_back(to_json(h));
  json eigenkets = json::array();
  for (const Ket& k : d.eigenkets) eigenkets.push_back(to_json(k));
  json pairing = json::array();
  for (const EigenPairing& p : d.pairing) pairing.push_back({p.first, p.second});
  return {{"eigenvalues", std::move(eigenvalues)},
          {"eigenkets", std::move(eigenkets)},
          {"pairing", std::move(pairing)},
          {"reconstruction_error", d.reconstruction_error}};
}

Bicomplex bicomplex_from_json(const json& j) {
  const Complex z1{number(j, "re1"), number(j, "im1")};
  const Complex z2{number(j, "re2"), number(j, "im2")};
  try {
    return Bicomplex::from_standard(z1, z2);
  } catch (const InvalidValueError& e) {
    throw ParseError(e.what());
  }
}

Complex complex_from_json(const json& j) { return {number(j, "re"), number(j, "im")}; }

Hyperbolic hyperbolic_from_json(const json& j) { return {number(j, "x1"), number(j, "x2")}; }

Ket ket_from_json(const json& j) {
  const std::size_t n = order(j);
  const json& entries = array(j, "entries", n);
  Ket psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = bicomplex_from_json(entries[i]);
  return psi;
}

BicomplexMatrix matrix_from_json(const json& j) {
  return square_from_json<Bicomplex>(j, bicomplex_from_json);
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  return square_from_json<Complex>(j, complex_from_json);
}

SpectralDecomposition decomposition_from_json(const json& j) {
  const json& values = field(j, "eigenvalues");
  if (!values.is_array() || values.empty()) throw ParseError("\"eigenvalues\" must be a non-empty array");
  const std::size_t n = values.size();
  const json& kets = array(j, "eigenkets", n);
  const json& pairing = array(j, "pairing", n);

  SpectralDecomposition d;
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues.push_back(hyperbolic_from_json(values[k]));
    Ket psi = ket_from_json(kets[k]);
    if (psi.size() != n) throw ParseError("eigenket length differs from the number of eigenvalues");
    d.eigenkets.push_back(std::move(psi));
    const json& p = pairing[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      throw ParseError("pairing entries must be [index, index]");
    }
    d.pairing.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  d.reconstruction_error = number(j, "reconstruction_error");
  return d;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace bispec::json_io
