#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tidx/hardy_s1.hpp"
#include "tidx/symbol.hpp"
#include "tidx/topo_index.hpp"

namespace tidx {

/// Knobs shared by the index, chern and convergence commands.
struct RunOptions {
  /// Truncation N; unset means the per-manifold default (see default_truncation).
  std::optional<int> truncation;
  IndexOptions index;
  QuadratureConfig quadrature;
};

/// S^1: 64. S^3: default_s3_truncation (by total degree).
int default_truncation(const AnySymbol& a);

/// Analytic index of either kind of symbol at truncation N (default when unset).
AnalyticIndex analytic_index(const AnySymbol& a, std::optional<int> truncation,
                             const IndexOptions& options);

/// Chern value with doubling check, dispatched on the symbol kind.
ChernValue chern_value(const AnySymbol& a, const QuadratureConfig& config);

struct PhaseTimings {
  double analytic_ms = 0.0;
  double topological_ms = 0.0;
  double total_ms = 0.0;
};

/// Both sides of the index theorem for one symbol.
/// Invariants: analytic_index = ker_dim - coker_dim; agreement <=> analytic = topological.
struct IndexReport {
  std::string manifold;
  int rank = 0;
  int analytic_index = 0;
  int ker_dim = 0;
  int coker_dim = 0;
  std::vector<int> truncation_sizes;
  /// Kernel and cokernel spectral gaps (+inf when no singular value was declared zero).
  double ker_spectral_gap = 0.0;
  double coker_spectral_gap = 0.0;
  /// Largest relative residual among kernel / cokernel candidates (0 when there are none).
  double ker_residual_max = 0.0;
  double coker_residual_max = 0.0;
  Complex topological_value;
  int topological_index = 0;
  double integrality_defect = 0.0;
  bool agreement = false;
  std::vector<std::string> warnings;
  PhaseTimings timings;
};

/// Throws NotInvertibleError, NumericsError (unstabilized, residual, non-integral Chern).
IndexReport compute_index_report(const AnySymbol& a, const RunOptions& options);

/// Non-finite reals serialize as null.
nlohmann::json to_json(const IndexReport& report);
std::string format_text(const IndexReport& report);
/// Header plus one data row.
std::string format_csv(const IndexReport& report);

/// Quadrature convergence table: the configured size scaled by 1/8, 1/4, 1/2, 1, 2
/// (S^3: theta and phi node counts scaled together; `size` is the theta count).
std::vector<QuadratureStep> convergence_table(const AnySymbol& a, const QuadratureConfig& config);

nlohmann::json convergence_to_json(const std::vector<QuadratureStep>& table);
/// "size,value_re,value_im,delta"; the first delta is "nan".
std::string convergence_to_csv(const std::vector<QuadratureStep>& table);
std::string convergence_to_text(const std::vector<QuadratureStep>& table);

nlohmann::json chern_to_json(const ChernValue& value);

/// Deterministic number formatting shared by the CSV and text writers (17 significant
/// digits, "nan" / "inf" for non-finite values).
std::string format_real(double x);

}  // namespace tidx
