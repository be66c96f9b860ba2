// xop: moments, moment matrices, exceptional Laguerre polynomials and the
// verification suite from the command line.
//
// Exit codes: 0 success, 1 computation failure or failing verification,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "xop/basis.hpp"
#include "xop/classical.hpp"
#include "xop/determinantal.hpp"
#include "xop/errors.hpp"
#include "xop/io.hpp"
#include "xop/moments.hpp"
#include "xop/numerics.hpp"
#include "xop/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> alphas;
  long precision_bits = xop::kDefaultPrecisionBits;
  std::string quad_nodes = "auto";
  std::string format;
  std::string out;
};

xop::ParameterContext context_for(const Config& cfg) {
  if (cfg.alphas.size() != 1) throw UsageError("exactly one --alpha value is required");
  try {
    return xop::ParameterContext::parse(cfg.alphas.front(), cfg.precision_bits);
  } catch (const xop::DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::size_t node_count_for(const Config& cfg, const xop::ParameterContext& ctx) {
  if (cfg.quad_nodes == "auto") return xop::adjusted_node_count(ctx);
  return std::stoul(cfg.quad_nodes);
}

std::string format_or(const Config& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

// Writes to --out when given (only after the whole output is produced, so a
// failed run leaves no partial file), otherwise to stdout.
void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
  file << text;
  if (!file) throw std::runtime_error("write to '" + cfg.out + "' failed");
}

int cmd_moments(const Config& cfg, int imax, int jmax, const std::string& method) {
  const auto ctx = context_for(cfg);
  if (imax < 0 || jmax < 0) throw UsageError("--imax and --jmax must be non-negative");
  std::optional<xop::MomentTable> table;
  if (method == "recursion") {
    if (imax < 2 || jmax < 2) throw UsageError("--method recursion needs --imax >= 2 and --jmax >= 2");
    table.emplace(xop::fill_table(ctx, imax, jmax));
  } else {
    const auto rule = xop::gauss_laguerre_rule(ctx.alpha(), node_count_for(cfg, ctx), ctx.precision());
    table.emplace(xop::quadrature_table(rule, ctx, imax, jmax));
  }
  std::ostringstream os;
  if (format_or(cfg, "csv") == "csv") {
    xop::write_moments_csv(os, *table);
  } else {
    xop::write_moments_json(os, *table);
  }
  emit(cfg, os.str());
  return 0;
}

xop::MomentTable table_for_degree(const xop::ParameterContext& ctx, int n) {
  const auto [i, j] = xop::required_extent(n);
  return xop::fill_table(ctx, i, j);
}

int cmd_poly(const Config& cfg, int n, const std::string& method_name, const std::string& basis_name,
             bool normalize) {
  const auto ctx = context_for(cfg);
  if (n < 2) throw UsageError("--n must be at least 2 (degrees 0 and 1 are excluded)");
  const xop::Method method = xop::parse_method(method_name);
  const xop::Basis basis = xop::parse_basis(basis_name);
  xop::ShiftedPoly p = method == xop::Method::closed_form
                           ? xop::from_monomial(xop::closed_form_xop(n, ctx), ctx)
                           : xop::construct(method, n, table_for_degree(ctx, n));
  if (normalize) p = xop::normalize_to_closed_form(p);

  std::ostringstream os;
  if (format_or(cfg, "json") == "json") {
    xop::write_polynomial_json(os, p, method, basis);
  } else {
    os << "k,coefficient\n";
    if (basis == xop::Basis::shifted) {
      for (std::size_t k = 0; k < p.coefficients.size(); ++k) os << k << ',' << p.coefficients[k].to_string() << '\n';
    } else {
      const auto m = xop::to_monomial(p);
      for (int k = 0; k <= n; ++k) os << k << ',' << m.coefficient(k).to_string() << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_matrix(const Config& cfg, int n) {
  const auto ctx = context_for(cfg);
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto mm = xop::build_matrix(n, table_for_degree(ctx, n));
  std::ostringstream os;
  if (format_or(cfg, "json") == "json") {
    xop::write_matrix_json(os, mm);
  } else {
    xop::write_matrix_csv(os, mm);
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_verify(const Config& cfg, int n_max) {
  if (cfg.alphas.empty()) throw UsageError("verify needs at least one --alpha value");
  if (n_max < 2) throw UsageError("--nmax must be at least 2");
  for (const auto& a : cfg.alphas) {
    // Validate up front so a bad alpha is a usage error rather than a failing record.
    Config single = cfg;
    single.alphas = {a};
    (void)context_for(single);
  }
  xop::SuiteOptions options;
  options.precision_bits = cfg.precision_bits;
  options.quad_nodes = cfg.quad_nodes == "auto" ? 0 : std::stoul(cfg.quad_nodes);
  const auto report = xop::run_suite(cfg.alphas, n_max, options);

  std::ostringstream os;
  if (format_or(cfg, "json") == "json") {
    xop::write_report_json(os, report);
  } else {
    xop::write_report_csv(os, report);
  }
  emit(cfg, os.str());
  std::cerr << "verify: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return report.all_passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional X2 Laguerre polynomials from adjusted moments"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--alpha", cfg.alphas, "Laguerre parameter alpha > 0 (comma-separated list for verify)")
      ->delimiter(',');
  app.add_option("--precision", cfg.precision_bits, "Working precision in bits")
      ->capture_default_str()
      ->check(CLI::Range(xop::kMinPrecisionBits, 1L << 20));
  app.add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Laguerre node count, or 'auto'")
      ->capture_default_str()
      ->check([](const std::string& v) -> std::string {
        if (v == "auto") return {};
        try {
          std::size_t used = 0;
          const long n = std::stol(v, &used);
          if (used == v.size() && n >= 8) return {};
        } catch (const std::exception&) {
        }
        return "--quad-nodes must be 'auto' or an integer >= 8";
      });
  app.add_option("--format", cfg.format, "Output format (default: csv for moments, json otherwise)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Output file (default: stdout)");

  int imax = 2;
  int jmax = 2;
  std::string moment_method = "recursion";
  auto* moments = app.add_subcommand("moments", "Adjusted moment table");
  moments->add_option("--imax", imax, "Largest i")->capture_default_str();
  moments->add_option("--jmax", jmax, "Largest j")->capture_default_str();
  moments->add_option("--method", moment_method, "recursion or quadrature")
      ->capture_default_str()
      ->check(CLI::IsMember({"recursion", "quadrature"}));

  int n = 2;
  std::string poly_method = "det-a";
  std::string basis = "monomial";
  bool normalize = false;
  auto* poly = app.add_subcommand("poly", "Exceptional Laguerre polynomial of degree n");
  poly->add_option("--n", n, "Degree (>= 2)")->required();
  poly->add_option("--method", poly_method, "det-a, det-b, gram-schmidt or closed-form")
      ->capture_default_str()
      ->check(CLI::IsMember({"det-a", "det-b", "gram-schmidt", "closed-form"}));
  poly->add_option("--basis", basis, "shifted or monomial")
      ->capture_default_str()
      ->check(CLI::IsMember({"shifted", "monomial"}));
  poly->add_flag("--normalize", normalize, "Scale to the closed-form leading coefficient");

  int matrix_n = 2;
  auto* matrix = app.add_subcommand("matrix", "Moment matrix M and right-hand side b");
  matrix->add_option("--n", matrix_n, "Degree (>= 2)")->required();

  int n_max = 6;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--nmax", n_max, "Largest degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*moments) return cmd_moments(cfg, imax, jmax, moment_method);
    if (*poly) return cmd_poly(cfg, n, poly_method, basis, normalize);
    if (*matrix) return cmd_matrix(cfg, matrix_n);
    if (*verify) return cmd_verify(cfg, n_max);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
