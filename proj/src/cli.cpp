#include "tidx/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tidx/errors.hpp"
#include "tidx/report.hpp"
#include "tidx/symbol_io.hpp"
#include "tidx/verify.hpp"

namespace tidx {

using nlohmann::json;

namespace {

struct CommonFlags {
  std::string symbol_path;
  std::optional<int> truncation;
  double tol = kDefaultRankTolerance;
  double residual_tol = kDefaultResidualTolerance;
  QuadratureConfig quadrature;
  std::string out_path;
  std::string format;  // empty: json with --out, text without (convergence: csv with --out)
  std::uint64_t seed = 0;
  int scalar_cases = VerifyOptions{}.scalar_cases;
  int pair_cases = VerifyOptions{}.pair_cases;
  int s3_cases = VerifyOptions{}.s3_cases;
  int s3_pair_cases = VerifyOptions{}.s3_pair_cases;
  std::vector<std::string> only;

  RunOptions run_options() const {
    RunOptions o;
    o.truncation = truncation;
    o.index.tol = tol;
    o.index.residual_tol = residual_tol;
    o.quadrature = quadrature;
    return o;
  }
};

void add_symbol_arg(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("symbol", f.symbol_path, "Symbol file (JSON)")->required();
}

void add_quadrature_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--grid", f.quadrature.s1_grid, "Trapezoid nodes on S1")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--theta-nodes", f.quadrature.theta_nodes, "Gauss-Legendre nodes in theta (S3)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--phi-nodes", f.quadrature.phi_nodes, "Trapezoid nodes per phi angle (S3)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--integrality-tol", f.quadrature.integrality_tol,
                  "Accepted distance of the Chern value from an integer")
      ->check(CLI::PositiveNumber);
}

void add_rank_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol", f.tol, "Relative singular-value threshold for kernel dimensions")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--residual-tol", f.residual_tol, "Relative residual bound for kernel vectors")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out_path, "Write the document to this file (atomically)");
  cmd->add_option("--format", f.format, "Document format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

std::string resolve_format(const CommonFlags& f, const char* with_out, const char* without_out) {
  if (!f.format.empty()) return f.format;
  return f.out_path.empty() ? without_out : with_out;
}

/// Document to --out (atomically) or to stdout. With --out, `summary` goes to stdout.
void emit(const CommonFlags& f, const std::string& document, const std::string& summary,
          std::ostream& out) {
  if (f.out_path.empty()) {
    out << document;
    return;
  }
  write_file_atomic(f.out_path, document);
  out << summary;
}

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

int exit_status_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidSymbol:
      return kExitParse;
    case ErrorKind::kNotInvertible:
      return kExitNotInvertible;
    case ErrorKind::kNumerics:
      return kExitNumerics;
  }
  return kExitFailed;
}

int cmd_index(const CommonFlags& f, std::ostream& out) {
  const AnySymbol a = read_symbol_file(f.symbol_path);
  const IndexReport report = compute_index_report(a, f.run_options());
  const std::string format = resolve_format(f, "json", "text");
  const std::string text = format_text(report);
  std::string document = text;
  if (format == "json") document = json_text(to_json(report));
  if (format == "csv") document = format_csv(report);
  emit(f, document, text, out);
  return report.agreement ? kExitOk : kExitFailed;
}

int cmd_chern(const CommonFlags& f, std::ostream& out) {
  const AnySymbol a = read_symbol_file(f.symbol_path);
  const ChernValue ch = chern_value(a, f.quadrature);
  const std::string format = resolve_format(f, "json", "text");
  std::ostringstream text;
  text << "chern value        " << format_real(ch.value.real())
       << (ch.value.imag() < 0 ? " - " : " + ") << format_real(std::abs(ch.value.imag())) << "i\n"
       << "nearest integer    " << ch.nearest_integer << "\n"
       << "integrality defect " << format_real(ch.integrality_defect) << "\n"
       << convergence_to_text(ch.grid_report);
  std::string document = text.str();
  if (format == "json") document = json_text(chern_to_json(ch));
  if (format == "csv") document = convergence_to_csv(ch.grid_report);
  emit(f, document, text.str(), out);
  require_integral(ch, f.quadrature.integrality_tol);
  return kExitOk;
}

int cmd_winding(const CommonFlags& f, std::ostream& out) {
  const AnySymbol any = read_symbol_file(f.symbol_path);
  const auto* a = std::get_if<LaurentSymbol>(&any);
  if (a == nullptr) throw SymbolError("winding numbers are defined for S1 symbols only");
  const LaurentSymbol det = a->is_scalar() ? *a : det_laurent(*a);
  const int by_argument = winding_argument(det, f.quadrature.s1_grid);
  const int by_roots = winding_roots(det);
  const std::string format = resolve_format(f, "json", "text");
  std::ostringstream text;
  text << "winding (argument) " << by_argument << "\n"
       << "winding (roots)    " << by_roots << "\n"
       << "of                 " << (a->is_scalar() ? "symbol" : "det(symbol)") << "\n";
  std::string document = text.str();
  if (format == "json")
    document = json_text(json{{"of", a->is_scalar() ? "symbol" : "det"},
                              {"winding_argument", by_argument},
                              {"winding_roots", by_roots},
                              {"agreement", by_argument == by_roots}});
  if (format == "csv")
    document = "winding_argument,winding_roots\n" + std::to_string(by_argument) + "," +
               std::to_string(by_roots) + "\n";
  emit(f, document, text.str(), out);
  return by_argument == by_roots ? kExitOk : kExitFailed;
}

int cmd_convergence(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const AnySymbol a = read_symbol_file(f.symbol_path);
  const std::vector<QuadratureStep> table = convergence_table(a, f.quadrature);
  const std::string format = resolve_format(f, "csv", "text");
  const std::string text = convergence_to_text(table);
  std::string document = text;
  if (format == "json") document = json_text(convergence_to_json(table));
  if (format == "csv") document = convergence_to_csv(table);
  emit(f, document, text, out);
  const double final_delta = table.back().delta;
  if (!(final_delta <= f.quadrature.integrality_tol)) {
    err << "error: quadrature not converged: final delta " << format_real(final_delta) << " > "
        << format_real(f.quadrature.integrality_tol) << "\n";
    return kExitNumerics;
  }
  return kExitOk;
}

int cmd_verify(const CommonFlags& f, std::ostream& out) {
  VerifyOptions options;
  options.seed = f.seed;
  options.scalar_cases = f.scalar_cases;
  options.pair_cases = f.pair_cases;
  options.s3_cases = f.s3_cases;
  options.s3_pair_cases = f.s3_pair_cases;
  options.only = f.only;
  options.index.tol = f.tol;
  options.index.residual_tol = f.residual_tol;
  options.quadrature = f.quadrature;
  const VerifyReport report = run_verify(options);
  const std::string format = resolve_format(f, "json", "text");
  const std::string text = format_text(report);
  std::string document = format == "json" ? json_text(to_json(report)) : text;
  if (format == "csv") {
    std::ostringstream csv;
    csv << "property,kind,cases,failed,passed\n";
    for (const auto& p : report.properties)
      csv << p.name << "," << p.kind << "," << p.cases << "," << p.failed << ","
          << (p.passed() ? "true" : "false") << "\n";
    document = csv.str();
  }
  emit(f, document, text, out);
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz index calculator: analytic vs topological index on S1 and S3", "tidx"};
  app.require_subcommand(1);
  CommonFlags f;

  CLI::App* index = app.add_subcommand("index", "Analytic and topological index of a symbol");
  add_symbol_arg(index, f);
  index->add_option("--trunc", f.truncation, "Truncation size N (default: 64 on S1, by degree on S3)")
      ->check(CLI::PositiveNumber);
  add_rank_flags(index, f);
  add_quadrature_flags(index, f);
  add_output_flags(index, f);

  CLI::App* chern = app.add_subcommand("chern", "Chern-character quadrature of a symbol");
  add_symbol_arg(chern, f);
  add_quadrature_flags(chern, f);
  add_output_flags(chern, f);

  CLI::App* winding = app.add_subcommand("winding", "Winding number of det(symbol) on S1");
  add_symbol_arg(winding, f);
  winding->add_option("--grid", f.quadrature.s1_grid, "Phase-tracking grid")
      ->check(CLI::PositiveNumber);
  add_output_flags(winding, f);

  CLI::App* convergence =
      app.add_subcommand("convergence", "Quadrature convergence table of the Chern value");
  add_symbol_arg(convergence, f);
  add_quadrature_flags(convergence, f);
  add_output_flags(convergence, f);

  CLI::App* verify = app.add_subcommand("verify", "Run the seeded invariant suite");
  verify->add_option("--seed", f.seed, "Randomness seed");
  verify->add_option("--scalar-cases", f.scalar_cases, "Random scalar symbols on S1")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--pair-cases", f.pair_cases, "Random matrix symbols / pairs on S1")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--s3-cases", f.s3_cases, "Random degree-one symbols on S3")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--s3-pair-cases", f.s3_pair_cases, "Random S3 pairs for the product law")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--only", f.only, "Run only these properties")
      ->check(CLI::IsMember(verify_property_names()));
  add_rank_flags(verify, f);
  add_quadrature_flags(verify, f);
  add_output_flags(verify, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitParse;
  }

  try {
    if (index->parsed()) return cmd_index(f, out);
    if (chern->parsed()) return cmd_chern(f, out);
    if (winding->parsed()) return cmd_winding(f, out);
    if (convergence->parsed()) return cmd_convergence(f, out, err);
    return cmd_verify(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace tidx
