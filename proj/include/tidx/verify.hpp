#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tidx/hardy_s1.hpp"
#include "tidx/topo_index.hpp"

namespace tidx {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int scalar_cases = 100;   // random scalar symbols on S^1
  int pair_cases = 50;      // random matrix symbols / pairs on S^1 (rank <= 3)
  int s3_cases = 6;         // random degree-one unitary symbols on S^3
  int s3_pair_cases = 2;    // random S^3 pairs for the (degree-two) product law
  /// Truncation for the random matrix symbols on S^1. Their factors keep roots at modulus
  /// <= 0.4 or >= 2.5, so kernel vectors decay like 0.4^n and N = 32 resolves them.
  /// Scalar symbols and the Noether law use the module default of 64.
  int s1_matrix_truncation = 32;
  /// Run only the named properties (empty: all).
  std::vector<std::string> only;
  IndexOptions index;
  QuadratureConfig quadrature;
};

/// One offending case, with every symbol it involved serialized for replay.
struct CaseFailure {
  int case_index = 0;
  std::string detail;
  nlohmann::json symbols;  // array of symbol documents
};

struct PropertyResult {
  std::string name;
  /// "rank" for properties decided by numerical kernel dimensions, "topological" for
  /// quadrature-only properties.
  std::string kind;
  int cases = 0;
  int failed = 0;
  std::vector<CaseFailure> failures;  // first few only
  bool passed() const { return failed == 0; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool passed() const;
  std::vector<std::string> failed_properties() const;
};

/// Runs the invariant suite: Noether law, oracle agreement, additivity, adjoint
/// antisymmetry, direct-sum stability, homotopy invariance and topological agreement on S^1;
/// the S^3 calibration and the S^3 versions of the same laws. Deterministic for a fixed
/// seed and options; numerical exceptions inside a case count as failures of that case.
VerifyReport run_verify(const VerifyOptions& options);

/// Names of all properties, in execution order.
std::vector<std::string> verify_property_names();

/// Stable serialization (no timings), byte-identical for identical runs.
nlohmann::json to_json(const VerifyReport& report);
std::string format_text(const VerifyReport& report);

/// At most this many failures are recorded per property.
inline constexpr int kMaxRecordedFailures = 3;

}  // namespace tidx
