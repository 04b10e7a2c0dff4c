#include "bispec/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bispec {

namespace {

double residual_of(const ComplexMatrix& a, const std::vector<double>& lambda, const ComplexMatrix& v) {
  const std::size_t n = a.size();
  double worst = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    const std::vector<Complex> u = column(v, col);
    const std::vector<Complex> au = multiply(a, u);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += std::norm(au[i] - lambda[col] * u[i]);
    worst = std::max(worst, std::sqrt(sq));
  }
  return worst;
}

// Annihilates w(p, q) with J = D R, where D = diag(1, e^{-i phi}) removes the
// phase of w(p, q) and R is the real Jacobi rotation [[c, s], [-s, c]].
void rotate(ComplexMatrix& w, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = w.size();
  const Complex apq = w(p, q);
  const double mag = std::abs(apq);
  const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
  const double app = w(p, p).real();
  const double aqq = w(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex wkp = w(k, p);
    const Complex wkq = w(k, q);
    w(k, p) = wkp * jpp + wkq * jqp;
    w(k, q) = wkp * jpq + wkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex wpk = w(p, k);
    const Complex wqk = w(q, k);
    w(p, k) = std::conj(jpp) * wpk + std::conj(jqp) * wqk;
    w(q, k) = std::conj(jpq) * wpk + std::conj(jqq) * wqk;
  }
  w(p, p) = app - t * mag;
  w(q, q) = aqq + t * mag;
  w(p, q) = 0.0;
  w(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

double off_diagonal_norm(const ComplexMatrix& a) {
  double sq = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sq += std::norm(a(i, j));
  return std::sqrt(sq);
}

ComplexHermitianEigenResult hermitian_eigen(const ComplexMatrix& a, const HermitianEigenOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("eigen tolerance must be > 0");
  if (opts.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

  const std::size_t n = a.size();
  const double fro = frobenius_norm(a);
  const double defect = hermitian_defect(a);
  if (defect > opts.tol * (1.0 + fro)) {
    throw NotHermitianError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }

  ComplexMatrix w = hermitian_part(a);
  ComplexMatrix v = ComplexMatrix::identity(n);
  ComplexHermitianEigenResult result;

  double off = off_diagonal_norm(w);
  result.off_norm_history.push_back(off);
  const double target = opts.tol * fro;

  int sweep = 0;
  while (off > target) {
    if (sweep == opts.max_sweeps) {
      std::vector<double> diag(n);
      for (std::size_t i = 0; i < n; ++i) diag[i] = w(i, i).real();
      throw NoConvergenceError("Jacobi did not converge in " + std::to_string(sweep) + " sweeps",
                               residual_of(a, diag, v));
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(w(p, q));
        if (mag == 0.0) continue;
        // Past the first few sweeps an entry below the rounding level of both
        // diagonal entries is simply dropped.
        const double g = 100.0 * mag;
        if (sweep > 4 && std::abs(w(p, p).real()) + g == std::abs(w(p, p).real()) &&
            std::abs(w(q, q).real()) + g == std::abs(w(q, q).real())) {
          w(p, q) = 0.0;
          w(q, p) = 0.0;
          continue;
        }
        rotate(w, v, p, q);
      }
    }
    off = off_diagonal_norm(w);
    result.off_norm_history.push_back(off);
  }
  result.sweeps = sweep;

  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), std::size_t{0});
  std::stable_sort(result.order.begin(), result.order.end(), [&](std::size_t x, std::size_t y) {
    return w(x, x).real() < w(y, y).real();
  });

  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = result.order[col];
    result.eigenvalues[col] = w(src, src).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, col) = v(i, src);
  }
  result.residual = residual_of(a, result.eigenvalues, result.eigenvectors);
  return result;
}

}  // namespace bispec
