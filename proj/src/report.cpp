#include "tidx/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "tidx/errors.hpp"
#include "tidx/hardy_s3.hpp"
#include "tidx/symbol_io.hpp"

namespace tidx {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

int default_truncation(const AnySymbol& a) {
  if (const auto* s3 = std::get_if<S3Symbol>(&a)) return default_s3_truncation(*s3);
  return kDefaultS1Truncation;
}

AnalyticIndex analytic_index(const AnySymbol& a, std::optional<int> truncation,
                             const IndexOptions& options) {
  const int n = truncation.value_or(default_truncation(a));
  if (const auto* s1 = std::get_if<LaurentSymbol>(&a)) return analytic_index_s1(*s1, n, options);
  return analytic_index_s3(std::get<S3Symbol>(a), n, options);
}

ChernValue chern_value(const AnySymbol& a, const QuadratureConfig& config) {
  if (const auto* s1 = std::get_if<LaurentSymbol>(&a))
    return chern_s1(*s1, config.s1_grid, config.integrality_tol);
  return chern_s3(std::get<S3Symbol>(a), config.theta_nodes, config.phi_nodes,
                  config.integrality_tol);
}

IndexReport compute_index_report(const AnySymbol& a, const RunOptions& options) {
  const auto start = Clock::now();
  IndexReport report;
  report.manifold = std::string(manifold_name(manifold_of(a)));
  report.rank = rank_of(a);

  const AnalyticIndex analytic = analytic_index(a, options.truncation, options.index);
  report.timings.analytic_ms = elapsed_ms(start);
  report.analytic_index = analytic.index;
  report.ker_dim = analytic.ker_dim;
  report.coker_dim = analytic.coker_dim;
  report.truncation_sizes = analytic.sizes;
  report.ker_spectral_gap = analytic.ker.spectral_gap;
  report.coker_spectral_gap = analytic.coker.spectral_gap;
  report.ker_residual_max = max_of(analytic.ker.residuals);
  report.coker_residual_max = max_of(analytic.coker.residuals);
  for (const auto& w : analytic.ker.warnings) report.warnings.push_back("kernel: " + w);
  for (const auto& w : analytic.coker.warnings) report.warnings.push_back("cokernel: " + w);

  const auto topo_start = Clock::now();
  const ChernValue ch = chern_value(a, options.quadrature);
  require_integral(ch, options.quadrature.integrality_tol);
  report.timings.topological_ms = elapsed_ms(topo_start);
  report.topological_value = ch.value;
  report.topological_index = ch.nearest_integer;
  report.integrality_defect = ch.integrality_defect;
  report.agreement = report.analytic_index == report.topological_index;
  report.timings.total_ms = elapsed_ms(start);
  return report;
}

json to_json(const IndexReport& r) {
  return json{
      {"manifold", r.manifold},
      {"rank", r.rank},
      {"analytic_index", r.analytic_index},
      {"ker_dim", r.ker_dim},
      {"coker_dim", r.coker_dim},
      {"truncation_sizes", r.truncation_sizes},
      {"spectral_gaps",
       {{"ker", real_or_null(r.ker_spectral_gap)}, {"coker", real_or_null(r.coker_spectral_gap)}}},
      {"residual_maxima", {{"ker", r.ker_residual_max}, {"coker", r.coker_residual_max}}},
      {"topological_value", complex_to_json(r.topological_value)},
      {"topological_index", r.topological_index},
      {"integrality_defect", r.integrality_defect},
      {"agreement", r.agreement},
      {"warnings", r.warnings},
      {"timings",
       {{"analytic_ms", r.timings.analytic_ms},
        {"topological_ms", r.timings.topological_ms},
        {"total_ms", r.timings.total_ms}}},
  };
}

std::string format_text(const IndexReport& r) {
  std::ostringstream out;
  out << "manifold            " << r.manifold << " (rank " << r.rank << ")\n";
  out << "analytic index      " << r.analytic_index << "  (ker " << r.ker_dim << ", coker "
      << r.coker_dim << ")\n";
  out << "truncation sizes   ";
  for (int n : r.truncation_sizes) out << " " << n;
  out << "\n";
  out << "spectral gaps       ker " << format_real(r.ker_spectral_gap) << ", coker "
      << format_real(r.coker_spectral_gap) << "\n";
  out << "residual maxima     ker " << format_real(r.ker_residual_max) << ", coker "
      << format_real(r.coker_residual_max) << "\n";
  out << "topological value   " << format_real(r.topological_value.real())
      << (r.topological_value.imag() < 0 ? " - " : " + ")
      << format_real(std::abs(r.topological_value.imag())) << "i  (defect "
      << format_real(r.integrality_defect) << ")\n";
  out << "topological index   " << r.topological_index << "\n";
  out << "agreement           " << (r.agreement ? "yes" : "NO") << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string format_csv(const IndexReport& r) {
  std::ostringstream out;
  out << "manifold,rank,analytic_index,ker_dim,coker_dim,topological_re,topological_im,"
         "topological_index,agreement\n";
  out << r.manifold << "," << r.rank << "," << r.analytic_index << "," << r.ker_dim << ","
      << r.coker_dim << "," << format_real(r.topological_value.real()) << ","
      << format_real(r.topological_value.imag()) << "," << r.topological_index << ","
      << (r.agreement ? "true" : "false") << "\n";
  return out.str();
}

std::vector<QuadratureStep> convergence_table(const AnySymbol& a, const QuadratureConfig& config) {
  constexpr double kScales[] = {0.125, 0.25, 0.5, 1.0, 2.0};
  std::vector<QuadratureStep> table;
  const auto* s1 = std::get_if<LaurentSymbol>(&a);
  const auto* s3 = std::get_if<S3Symbol>(&a);
  for (double scale : kScales) {
    QuadratureStep step;
    if (s1 != nullptr) {
      step.size = std::max(2, static_cast<int>(std::lround(config.s1_grid * scale)));
      if (!table.empty() && step.size <= table.back().size) continue;
      step.value = chern_s1_value(*s1, step.size);
    } else {
      step.size = std::max(2, static_cast<int>(std::lround(config.theta_nodes * scale)));
      if (!table.empty() && step.size <= table.back().size) continue;
      const int phi = std::max(2, static_cast<int>(std::lround(config.phi_nodes * scale)));
      step.value = chern_s3_value(*s3, step.size, phi);
    }
    step.delta = table.empty() ? std::numeric_limits<double>::quiet_NaN()
                               : std::abs(step.value - table.back().value);
    table.push_back(step);
  }
  return table;
}

json convergence_to_json(const std::vector<QuadratureStep>& table) {
  json rows = json::array();
  for (const auto& s : table)
    rows.push_back(json{{"size", s.size},
                        {"value", complex_to_json(s.value)},
                        {"delta", real_or_null(s.delta)}});
  return rows;
}

std::string convergence_to_csv(const std::vector<QuadratureStep>& table) {
  std::ostringstream out;
  out << "size,value_re,value_im,delta\n";
  for (const auto& s : table)
    out << s.size << "," << format_real(s.value.real()) << "," << format_real(s.value.imag())
        << "," << format_real(s.delta) << "\n";
  return out.str();
}

std::string convergence_to_text(const std::vector<QuadratureStep>& table) {
  std::ostringstream out;
  out << "size      value                                      delta\n";
  for (const auto& s : table) {
    std::string size = std::to_string(s.size);
    size.resize(10, ' ');
    std::string value = format_real(s.value.real()) + (s.value.imag() < 0 ? " - " : " + ") +
                        format_real(std::abs(s.value.imag())) + "i";
    value.resize(std::max<std::size_t>(value.size() + 1, 43), ' ');
    out << size << value << format_real(s.delta) << "\n";
  }
  return out.str();
}

json chern_to_json(const ChernValue& value) {
  return json{{"value", complex_to_json(value.value)},
              {"nearest_integer", value.nearest_integer},
              {"integrality_defect", value.integrality_defect},
              {"grid_report", convergence_to_json(value.grid_report)}};
}

}  // namespace tidx
