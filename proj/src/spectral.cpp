#include "bispec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "bispec/errors.hpp"

namespace bispec {

SpectralDecomposition bicomplex_spectral(const BicomplexMatrix& t, const SpectralOptions& opts) {
  if (!is_self_adjoint(t, opts.tol)) throw NotSelfAdjointError("operator is not self-adjoint");

  const std::size_t n = t.size();
  const ComponentMatrices c = decompose(t);
  const HermitianEigenOptions eig_opts{opts.tol, opts.max_sweeps};

  // Within-tolerance asymmetry is discarded before the component solves.
  const ComplexMatrix a1 = hermitian_part(c.first);
  const ComplexMatrix a2 = hermitian_part(c.second);

  ComplexHermitianEigenResult r1;
  ComplexHermitianEigenResult r2;
  if (opts.parallel && n >= 32) {
    auto f1 = std::async(std::launch::async, [&] { return hermitian_eigen(a1, eig_opts); });
    r2 = hermitian_eigen(a2, eig_opts);
    r1 = f1.get();
  } else {
    r1 = hermitian_eigen(a1, eig_opts);
    r2 = hermitian_eigen(a2, eig_opts);
  }

  SpectralDecomposition d;
  d.eigenvalues.reserve(n);
  d.eigenkets.reserve(n);
  d.pairing.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues.push_back({r1.eigenvalues[k], r2.eigenvalues[k]});
    Ket psi(n);
    for (std::size_t i = 0; i < n; ++i) {
      psi[i] = Bicomplex::from_idempotent(r1.eigenvectors(i, k), r2.eigenvectors(i, k));
    }
    d.eigenkets.push_back(std::move(psi));
    d.pairing.push_back({r1.order[k], r2.order[k]});
  }
  d.reconstruction_error = max_entry_modulus(t - reconstruct(d));
  return d;
}

BicomplexMatrix reconstruct(const SpectralDecomposition& d) {
  const std::size_t n = d.eigenkets.empty() ? 0 : d.eigenkets.front().size();
  BicomplexMatrix out(n);
  for (std::size_t k = 0; k < d.eigenkets.size(); ++k) {
    out += d.eigenvalues[k].to_bicomplex() * outer_product(d.eigenkets[k], d.eigenkets[k]);
  }
  return out;
}

std::vector<std::size_t> null_cone_eigenvalues(const SpectralDecomposition& d, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
    const Bicomplex lambda = d.eigenvalues[k].to_bicomplex();
    if (lambda.is_zero() || in_null_cone(lambda, tol)) out.push_back(k);
  }
  return out;
}

std::vector<CompactDemoRow> compact_diagonal_demo(std::size_t n_max, double p, double q,
                                                  const SpectralOptions& opts) {
  if (n_max < 2) throw std::invalid_argument("compact demo needs n_max >= 2");
  if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("decay exponents must be > 0");

  auto lambda = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return Hyperbolic{std::pow(kd, -p), std::pow(kd, -q)};
  };
  auto diagonal_block = [&](std::size_t from, std::size_t to) {
    BicomplexMatrix m(to - from + 1);
    for (std::size_t k = from; k <= to; ++k) m(k - from, k - from) = lambda(k).to_bicomplex();
    return m;
  };

  std::vector<CompactDemoRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SpectralDecomposition d = bicomplex_spectral(diagonal_block(1, n), opts);

    std::vector<double> want1;
    std::vector<double> want2;
    std::vector<double> got1;
    std::vector<double> got2;
    for (std::size_t k = 1; k <= n; ++k) {
      want1.push_back(lambda(k).x1);
      want2.push_back(lambda(k).x2);
      got1.push_back(d.eigenvalues[k - 1].x1);
      got2.push_back(d.eigenvalues[k - 1].x2);
    }
    std::ranges::sort(want1);
    std::ranges::sort(want2);
    std::ranges::sort(got1);
    std::ranges::sort(got2);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      err = std::max({err, std::abs(want1[k] - got1[k]), std::abs(want2[k] - got2[k])});
    }

    rows.push_back({n, operator_norm(diagonal_block(n + 1, 2 * n + 1)), err});
  }
  return rows;
}

}  // namespace bispec
