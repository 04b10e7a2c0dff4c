#include "bispec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "bispec/json_io.hpp"
#include "bispec/operators.hpp"
#include "bispec/spectral.hpp"

namespace bispec::cli {

namespace {

using json_io::json;

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool valid(const Config& c, std::ostream& err) {
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) {
    err << "error: --tol must be a positive number\n";
    return false;
  }
  if (c.max_sweeps < 1) {
    err << "error: --max-sweeps must be >= 1\n";
    return false;
  }
  return true;
}

// Writes `doc` to the configured file or to `out`; returns the stream that
// should receive the human summary.
std::ostream& emit(const json& doc, const Config& config, std::ostream& out, std::ostream& err) {
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) throw std::runtime_error("cannot write " + *config.output_path);
    file << doc.dump(2) << '\n';
    return out;
  }
  out << doc.dump(2) << '\n';
  return err;
}

void write_copy(const json& doc, const Config& config) {
  if (!config.output_path) return;
  std::ofstream file(*config.output_path);
  if (!file) throw std::runtime_error("cannot write " + *config.output_path);
  file << doc.dump(2) << '\n';
}

// Runs `body` with the matrix loaded from `path`, mapping library errors onto
// exit codes.
int with_matrix(const std::string& path, const Config& config, std::ostream& err,
                const std::function<int(const BicomplexMatrix&)>& body) {
  if (!valid(config, err)) return kParseError;
  BicomplexMatrix t;
  try {
    t = json_io::matrix_from_json(json_io::load_file(path));
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kParseError;
  }
  try {
    return body(t);
  } catch (const NotSelfAdjointError& e) {
    err << "error: " << e.what() << '\n';
    return kNotSelfAdjoint;
  } catch (const NoConvergenceError& e) {
    err << "error: " << e.what() << " (residual " << fmt_double(e.residual()) << ")\n";
    return kNoConvergence;
  }
}

SpectralOptions spectral_options(const Config& c) { return {c.tol, c.max_sweeps, true}; }

Ket random_ket(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Ket psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    psi[i] = Bicomplex::from_idempotent({g(rng), g(rng)}, {g(rng), g(rng)});
  }
  return psi;
}

Bicomplex random_scalar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Bicomplex::from_idempotent({g(rng), g(rng)}, {g(rng), g(rng)});
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool passed, double value, const std::string& detail) {
    out_ << (passed ? "PASS " : "FAIL ") << name << ": " << detail << " (" << fmt_double(value) << ")\n";
    failed_ = failed_ || !passed;
    doc_.push_back({{"name", name}, {"passed", passed}, {"value", value}, {"detail", detail}});
  }

  void info(const std::string& name, const std::string& detail) {
    out_ << "INFO " << name << ": " << detail << '\n';
    notes_.push_back({{"name", name}, {"detail", detail}});
  }

  bool failed() const { return failed_; }
  json to_json() const { return {{"checks", doc_}, {"info", notes_}, {"passed", !failed_}}; }

 private:
  std::ostream& out_;
  bool failed_ = false;
  json doc_ = json::array();
  json notes_ = json::array();
};

double rel(const Bicomplex& a, const Bicomplex& b) {
  return modulus(a - b) / (1.0 + std::max(modulus(a), modulus(b)));
}

}  // namespace

int cmd_spectral(const std::string& input_path, const Config& config, std::ostream& out,
                 std::ostream& err) {
  return with_matrix(input_path, config, err, [&](const BicomplexMatrix& t) {
    const SpectralDecomposition d = bicomplex_spectral(t, spectral_options(config));
    std::ostream& summary = emit(json_io::to_json(d), config, out, err);
    for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
      const Hyperbolic& h = d.eigenvalues[k];
      summary << "lambda[" << k << "] = " << format_idempotent(h) << " = " << format_standard(h) << '\n';
    }
    summary << "reconstruction error " << fmt_double(d.reconstruction_error) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_adjoint(const std::string& input_path, const Config& config, std::ostream& out,
                std::ostream& err) {
  return with_matrix(input_path, config, err, [&](const BicomplexMatrix& t) {
    emit(json_io::to_json(adjoint(t)), config, out, err);
    return static_cast<int>(kOk);
  });
}

int cmd_norm(const std::string& input_path, const Config& config, std::ostream& out,
             std::ostream& err) {
  return with_matrix(input_path, config, err, [&](const BicomplexMatrix& t) {
    const double value = operator_norm(t);
    std::ostream& summary = emit(json{{"operator_norm", value}}, config, out, err);
    summary << "||T|| = " << fmt_double(value) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_decompose(const std::string& input_path, const Config& config, std::ostream& out,
                  std::ostream& err) {
  return with_matrix(input_path, config, err, [&](const BicomplexMatrix& t) {
    const ComponentMatrices c = decompose(t);
    emit(json{{"component1", json_io::to_json(c.first)}, {"component2", json_io::to_json(c.second)}},
         config, out, err);
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& input_path, const Config& config, std::ostream& out,
               std::ostream& err) {
  return with_matrix(input_path, config, err, [&](const BicomplexMatrix& t) {
    const std::size_t n = t.size();
    std::mt19937_64 rng(config.seed.value_or(kDefaultSeed));
    Report report(out);

    const BicomplexMatrix t_star = adjoint(t);
    const double norm_t = operator_norm(t);
    const bool self_adjoint = is_self_adjoint(t, config.tol);
    report.info("self_adjoint", self_adjoint ? "yes" : "no");

    report.check("adjoint_involution", adjoint(t_star) == t, 0.0, "(T*)* == T exactly");

    {
      const double norm_star = operator_norm(t_star);
      const double gap = std::abs(norm_t - norm_star) / std::max(1.0, norm_t);
      report.check("norm_adjoint", gap <= 1e-9, gap, "||T|| == ||T*||");
      const double norm_sq = operator_norm(compose(t_star, t));
      const double gap2 = std::abs(norm_sq - norm_t * norm_t) / std::max(1.0, norm_t * norm_t);
      report.check("norm_cstar", gap2 <= 1e-9, gap2, "||T*T|| == ||T||^2");
    }

    double adj_worst = 0.0;
    double adj_prime_worst = 0.0;
    double bound_worst = 0.0;
    double add_worst = 0.0;
    double hom_worst = 0.0;
    double sym_worst = 0.0;
    double norma_worst = 0.0;
    bool positive = true;
    bool definite = true;
    for (int s = 0; s < kVerifySamples; ++s) {
      const Ket psi = random_ket(rng, n);
      const Ket phi = random_ket(rng, n);
      const Ket chi = random_ket(rng, n);
      const Bicomplex w = random_scalar(rng);

      const Ket t_phi = apply(t, phi);
      const Ket ts_psi = apply(t_star, psi);
      adj_worst = std::max(adj_worst, rel(scalar_product(psi, t_phi), scalar_product(ts_psi, phi)));
      adj_prime_worst =
          std::max(adj_prime_worst, std::abs(scalar_product_prime(psi, t_phi) - scalar_product_prime(ts_psi, phi)) /
                                        (1.0 + std::abs(scalar_product_prime(psi, t_phi))));
      bound_worst = std::max(bound_worst, norm(apply(t, psi)) / (norm_t * norm(psi) + 1e-300) - 1.0);

      add_worst = std::max(add_worst, rel(scalar_product(psi, phi + chi),
                                          scalar_product(psi, phi) + scalar_product(psi, chi)));
      hom_worst = std::max(hom_worst, rel(scalar_product(psi, w * phi), w * scalar_product(psi, phi)));
      sym_worst = std::max(sym_worst, rel(scalar_product(psi, phi),
                                          conj(scalar_product(phi, psi), Conjugation::dagger3)));
      positive = positive && check_hyperbolic_positive(psi).holds;
      const Bicomplex pp = scalar_product(psi, psi);
      definite = definite && !(modulus(pp) <= 1e-12 * (1.0 + norm(psi)));
      norma_worst = std::max(norma_worst, std::abs(norm(psi) - modulus(nth_root(pp, 2))) / (1.0 + norm(psi)));
    }
    const double zero_pp = modulus(scalar_product(Ket(n), Ket(n)));

    report.check("adjoint_relation", adj_worst <= 1e-10, adj_worst, "(psi, T phi) == (T* psi, phi)");
    report.check("adjoint_relation_prime", adj_prime_worst <= 1e-10, adj_prime_worst,
                 "(psi, T phi)' == (T* psi, phi)'");
    report.check("bounded", bound_worst <= 1e-10, bound_worst, "||T psi|| <= ||T|| ||psi||");
    report.check("sp_additivity", add_worst <= 1e-12, add_worst, "(psi, phi + chi) == (psi, phi) + (psi, chi)");
    report.check("sp_homogeneity", hom_worst <= 1e-12, hom_worst, "(psi, w phi) == w (psi, phi)");
    report.check("sp_conjugate_symmetry", sym_worst <= 1e-12, sym_worst, "(psi, phi) == dagger3((phi, psi))");
    report.check("sp_definite", definite && zero_pp == 0.0, zero_pp, "(psi, psi) == 0 iff psi == 0");
    report.check("sp_hyperbolic_positive", positive, 0.0, "(psi, psi) in D+");
    report.check("norm_root_identity", norma_worst <= 1e-12, norma_worst, "||psi|| == |sqrt((psi, psi))|");

    if (self_adjoint) {
      try {
        const SpectralDecomposition d = bicomplex_spectral(t, spectral_options(config));
        double ortho = 0.0;
        double eq = 0.0;
        bool hyperbolic = true;
        for (std::size_t a = 0; a < n; ++a) {
          const Bicomplex lambda = d.eigenvalues[a].to_bicomplex();
          eq = std::max(eq, norm(apply(t, d.eigenkets[a]) - lambda * d.eigenkets[a]));
          for (std::size_t b = 0; b < n; ++b) {
            const Bicomplex want = a == b ? Bicomplex::one() : Bicomplex::zero();
            ortho = std::max(ortho, modulus(scalar_product(d.eigenkets[a], d.eigenkets[b]) - want));
          }
          const ScalarClass cls = classify(lambda, 1e-12 * (1.0 + norm_t));
          hyperbolic = hyperbolic && cls != ScalarClass::general && cls != ScalarClass::complex_i1;
        }
        report.check("eigenkets_orthonormal", ortho <= 1e-10, ortho, "(psi_m, psi_n) == delta_mn");
        report.check("eigen_equation", eq <= 1e-9 * (1.0 + norm_t), eq, "T psi_n == lambda_n psi_n");
        report.check("eigenvalues_hyperbolic", hyperbolic, 0.0, "lambda_n in D");
        report.check("reconstruction", d.reconstruction_error <= 1e-10 * (1.0 + norm_t), d.reconstruction_error,
                     "T == sum lambda_n |psi_n><psi_n|");

        const std::vector<std::size_t> singular = null_cone_eigenvalues(d, config.tol * (1.0 + norm_t));
        if (singular.empty()) {
          report.info("invertible", "yes");
        } else {
          std::string detail = "no; zero or null-cone eigenvalues";
          for (std::size_t k : singular) detail += " lambda[" + std::to_string(k) + "] = " + format_idempotent(d.eigenvalues[k]);
          report.info("invertible", detail);
        }
      } catch (const NoConvergenceError& e) {
        report.check("spectral_decomposition", false, e.residual(), e.what());
      }
    }

    write_copy(report.to_json(), config);
    return static_cast<int>(report.failed() ? kCheckFailed : kOk);
  });
}

int cmd_demo_compact(long long n_max, double p, double q, const Config& config, std::ostream& out,
                     std::ostream& err) {
  if (!valid(config, err)) return kParseError;
  if (n_max < 2 || !(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    err << "error: demo-compact needs n_max >= 2 and positive decay exponents\n";
    return kParseError;
  }
  std::vector<CompactDemoRow> rows;
  try {
    rows = compact_diagonal_demo(static_cast<std::size_t>(n_max), p, q, spectral_options(config));
  } catch (const NoConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  }

  json doc = json::array();
  char line[128];
  std::snprintf(line, sizeof line, "%6s  %-24s  %s\n", "n", "tail_norm", "eigenvalue_error");
  out << line;
  for (const CompactDemoRow& r : rows) {
    std::snprintf(line, sizeof line, "%6zu  %-24.17g  %.3g\n", r.truncation, r.tail_norm, r.eigenvalue_error);
    out << line;
    doc.push_back({{"n", r.truncation}, {"tail_norm", r.tail_norm}, {"eigenvalue_error", r.eigenvalue_error}});
  }
  write_copy(json{{"p", p}, {"q", q}, {"rows", std::move(doc)}}, config);
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicomplex operators: spectral decomposition, adjoints, norms"};
  app.require_subcommand(1);

  Config config;
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--tol", config.tol, "Self-adjointness and Jacobi tolerance")->capture_default_str();
  app.add_option("--max-sweeps", config.max_sweeps, "Jacobi sweep limit")->capture_default_str();
  auto* out_opt = app.add_option("--out", out_path, "Write the JSON result to this file");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for verification sampling");

  std::string input;
  const auto add_matrix_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("input", input, "Matrix JSON file")->required();
    return sub;
  };
  auto* spectral = add_matrix_command("spectral", "Spectral decomposition of a self-adjoint matrix");
  auto* verify = add_matrix_command("verify", "Run invariant checks against a matrix");
  auto* adjoint_cmd = add_matrix_command("adjoint", "Adjoint matrix");
  auto* norm_cmd = add_matrix_command("norm", "Operator norm");
  auto* decompose_cmd = add_matrix_command("decompose", "Idempotent component matrices");

  long long n_max = 16;
  double p = 1.0;
  double q = 1.0;
  auto* demo = app.add_subcommand("demo-compact", "Truncated compact diagonal operator demo")->fallthrough();
  demo->add_option("--n-max", n_max, "Largest truncation")->capture_default_str();
  demo->add_option("--p", p, "Decay exponent of the first component")->capture_default_str();
  demo->add_option("--q", q, "Decay exponent of the second component")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (*out_opt) config.output_path = out_path;
  if (*seed_opt) config.seed = seed;

  try {
    if (*spectral) return cmd_spectral(input, config, out, err);
    if (*verify) return cmd_verify(input, config, out, err);
    if (*adjoint_cmd) return cmd_adjoint(input, config, out, err);
    if (*norm_cmd) return cmd_norm(input, config, out, err);
    if (*decompose_cmd) return cmd_decompose(input, config, out, err);
    if (*demo) return cmd_demo_compact(n_max, p, q, config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kParseError;
}

}  // namespace bispec::cli
