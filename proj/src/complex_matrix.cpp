#include <algorithm>
#include <cmath>

#include "bispec/matrix.hpp"

namespace bispec {

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("matrix order mismatch");
  const std::size_t n = a.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Complex> multiply(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.size() != v.size()) throw DimensionError("matrix/vector dimension mismatch");
  const std::size_t n = a.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sq = 0.0;
  for (const Complex& z : a.data()) sq += std::norm(z);
  return std::sqrt(sq);
}

double hermitian_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

std::vector<Complex> column(const ComplexMatrix& a, std::size_t j) {
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(i, j);
  return out;
}

}  // namespace bispec
