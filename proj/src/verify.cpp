#include "tidx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "tidx/errors.hpp"
#include "tidx/generators.hpp"
#include "tidx/hardy_s3.hpp"
#include "tidx/report.hpp"
#include "tidx/symbol_io.hpp"

namespace tidx {

using nlohmann::json;

namespace {

constexpr double kChernDefectS1 = 1e-8;
constexpr double kChernDefectS3 = 1e-6;
constexpr double kHomomorphismTolerance = 1e-8;
constexpr int kHomotopySamples = 10;
constexpr double kHomotopyNorm = 0.5;
constexpr double kScalarHomotopyCoefficient = 0.4;
constexpr int kWindingGrid = 64;

/// Independent, reproducible stream per property (splitmix64 of seed and property id).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t property) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (property + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// A case returns an empty string on success, otherwise a description of the violation.
using CaseCheck = std::function<std::string()>;

class PropertyRun {
 public:
  PropertyRun(std::string name, std::string kind) {
    result_.name = std::move(name);
    result_.kind = std::move(kind);
  }

  void run(int case_index, const std::vector<json>& symbols, const CaseCheck& check) {
    ++result_.cases;
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    if (detail.empty()) return;
    ++result_.failed;
    if (static_cast<int>(result_.failures.size()) < kMaxRecordedFailures)
      result_.failures.push_back({case_index, detail, json(symbols)});
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string mismatch(const std::string& what, long long got, long long expected) {
  std::ostringstream msg;
  msg << what << ": got " << got << ", expected " << expected;
  return msg.str();
}

/// Index of a random matrix symbol (see VerifyOptions::s1_matrix_truncation).
int index_of(const LaurentSymbol& a, const VerifyOptions& o) {
  return analytic_index_s1(a, o.s1_matrix_truncation, o.index).index;
}

int index_of(const S3Symbol& a, const VerifyOptions& o) {
  return analytic_index_s3(a, default_s3_truncation(a), o.index).index;
}

int chern_integer(const LaurentSymbol& a, const VerifyOptions& o, double defect_tol) {
  const ChernValue ch = chern_s1(a, o.quadrature.s1_grid, o.quadrature.integrality_tol);
  require_integral(ch, defect_tol);
  return ch.nearest_integer;
}

int chern_integer(const S3Symbol& a, const VerifyOptions& o, double defect_tol) {
  const ChernValue ch =
      chern_s3(a, o.quadrature.theta_nodes, o.quadrature.phi_nodes, o.quadrature.integrality_tol);
  require_integral(ch, defect_tol);
  return ch.nearest_integer;
}

LaurentSymbol random_matrix_symbol(SymbolGenerator& gen) {
  return gen.matrix_invertible(gen.uniform_int(1, 3));
}

/// Invertible polynomial homotopy starting at a: scalar a (1 + t c z^{+-1}) with |c| <= 0.4,
/// matrix a (I + t c z^k E_ij)(I + t B) with i != j and ||B|| = 1/2.
std::function<LaurentSymbol(double)> s1_homotopy(const LaurentSymbol& a, SymbolGenerator& gen) {
  const int r = a.rank();
  if (r == 1) {
    // Root of 1 + t c z^{+-1} stays at modulus >= 2.5, like the generator's own roots.
    const int k = gen.uniform_int(0, 1) == 0 ? -1 : 1;
    const Complex c = gen.uniform(0.1, kScalarHomotopyCoefficient) * gen.unit_phase();
    return [a, k, c](double t) {
      if (t == 0.0) return a;
      return multiply(a, add(LaurentSymbol::identity(1), LaurentSymbol::monomial(k, 1, t * c)));
    };
  }
  int k = gen.uniform_int(-2, 1);
  if (k >= 0) ++k;
  const int i = gen.uniform_int(0, r - 1);
  int j = gen.uniform_int(0, r - 2);
  if (j >= i) ++j;
  CMatrix unit = CMatrix::Zero(r, r);
  unit(i, j) = gen.uniform(0.2, 1.0) * gen.unit_phase();
  const CMatrix b = gen.near_identity(r, kHomotopyNorm) - CMatrix::Identity(r, r);
  return [a, k, unit, b, r](double t) {
    if (t == 0.0) return a;
    const LaurentSymbol shear =
        add(LaurentSymbol::identity(r), LaurentSymbol(r, k, {CMatrix(t * unit)}));
    const CMatrix bend = CMatrix::Identity(r, r) + t * b;
    return multiply(multiply(a, shear), LaurentSymbol::constant(bend));
  };
}

double homotopy_time(int sample) { return static_cast<double>(sample) / (kHomotopySamples - 1); }

// ---- S^1 properties ---------------------------------------------------------------------

PropertyResult noether_s1(const VerifyOptions& o) {
  PropertyRun run("noether_s1", "rank");
  for (int m = -8; m <= 8; ++m) {
    const LaurentSymbol a = LaurentSymbol::monomial(m);
    run.run(m + 8, {to_json(a)}, [&] {
      const AnalyticIndex idx = analytic_index_s1(a, kDefaultS1Truncation, o.index);
      if (idx.ker_dim != std::max(-m, 0)) return mismatch("ker dim", idx.ker_dim, std::max(-m, 0));
      if (idx.coker_dim != std::max(m, 0))
        return mismatch("coker dim", idx.coker_dim, std::max(m, 0));
      return std::string();
    });
  }
  return run.take();
}

PropertyResult oracle_agreement_s1(const VerifyOptions& o) {
  PropertyRun run("oracle_agreement_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 1));
  for (int c = 0; c < o.scalar_cases; ++c) {
    const LaurentSymbol f = gen.scalar_invertible();
    run.run(c, {to_json(f)}, [&] {
      const int analytic = analytic_index_s1(f, kDefaultS1Truncation, o.index).index;
      const int roots = winding_roots(f);
      const int argument = winding_argument(f, kWindingGrid);
      const int chern = chern_integer(f, o, kChernDefectS1);
      if (analytic != -roots) return mismatch("analytic vs -winding_roots", analytic, -roots);
      if (roots != argument) return mismatch("winding_argument vs winding_roots", argument, roots);
      if (analytic != chern) return mismatch("analytic vs chern_s1", analytic, chern);
      return std::string();
    });
  }
  return run.take();
}

PropertyResult additivity_s1(const VerifyOptions& o) {
  PropertyRun run("additivity_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 2));
  for (int c = 0; c < o.pair_cases; ++c) {
    const int r = gen.uniform_int(1, 3);
    const LaurentSymbol a = gen.matrix_invertible(r);
    const LaurentSymbol b = gen.matrix_invertible(r);
    run.run(c, {to_json(a), to_json(b)}, [&] {
      const int ia = index_of(a, o);
      const int ib = index_of(b, o);
      const int iab = index_of(multiply(a, b), o);
      return iab == ia + ib ? std::string() : mismatch("ind(ab)", iab, ia + ib);
    });
  }
  return run.take();
}

PropertyResult adjoint_antisymmetry_s1(const VerifyOptions& o) {
  PropertyRun run("adjoint_antisymmetry_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 3));
  for (int c = 0; c < o.pair_cases; ++c) {
    const LaurentSymbol a = random_matrix_symbol(gen);
    run.run(c, {to_json(a)}, [&] {
      const int ia = index_of(a, o);
      const int istar = index_of(adjoint(a), o);
      return istar == -ia ? std::string() : mismatch("ind(a*)", istar, -ia);
    });
  }
  return run.take();
}

PropertyResult stabilization_s1(const VerifyOptions& o) {
  PropertyRun run("stabilization_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 4));
  for (int c = 0; c < o.pair_cases; ++c) {
    const LaurentSymbol a = random_matrix_symbol(gen);
    const int extra = gen.uniform_int(1, 2);
    run.run(c, {to_json(a)}, [&] {
      const int ia = index_of(a, o);
      const int isum = index_of(direct_sum(a, LaurentSymbol::identity(extra)), o);
      return isum == ia ? std::string() : mismatch("ind(a + I)", isum, ia);
    });
  }
  return run.take();
}

PropertyResult homotopy_s1(const VerifyOptions& o) {
  PropertyRun run("homotopy_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 5));
  for (int c = 0; c < o.pair_cases; ++c) {
    const LaurentSymbol a = random_matrix_symbol(gen);
    const auto path = s1_homotopy(a, gen);
    run.run(c, {to_json(a), to_json(path(1.0))}, [&] {
      const int start = index_of(path(0.0), o);
      for (int s = 1; s < kHomotopySamples; ++s) {
        const int here = index_of(path(homotopy_time(s)), o);
        if (here != start)
          return mismatch("index at t=" + format_real(homotopy_time(s)), here, start);
      }
      return std::string();
    });
  }
  return run.take();
}

PropertyResult topological_agreement_s1(const VerifyOptions& o) {
  PropertyRun run("topological_agreement_s1", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 6));
  for (int c = 0; c < o.pair_cases; ++c) {
    const LaurentSymbol a = random_matrix_symbol(gen);
    run.run(c, {to_json(a)}, [&] {
      const int analytic = index_of(a, o);
      const int chern = chern_integer(a, o, kChernDefectS1);
      const LaurentSymbol det = det_laurent(a);
      const int roots = winding_roots(det);
      const int argument = winding_argument(det, kWindingGrid);
      if (analytic != chern) return mismatch("analytic vs chern_s1", analytic, chern);
      if (analytic != -roots) return mismatch("analytic vs -winding_roots(det)", analytic, -roots);
      if (roots != argument) return mismatch("winding_argument(det)", argument, roots);
      return std::string();
    });
  }
  return run.take();
}

PropertyResult chern_homomorphism_s1(const VerifyOptions& o) {
  PropertyRun run("chern_homomorphism_s1", "topological");
  SymbolGenerator gen(stream_seed(o.seed, 7));
  for (int c = 0; c < o.pair_cases; ++c) {
    const int r = gen.uniform_int(1, 3);
    const LaurentSymbol a = gen.matrix_invertible(r);
    const LaurentSymbol b = gen.matrix_invertible(r);
    run.run(c, {to_json(a), to_json(b)}, [&] {
      const int grid = o.quadrature.s1_grid;
      const Complex defect = chern_s1_value(multiply(a, b), grid) - chern_s1_value(a, grid) -
                             chern_s1_value(b, grid);
      if (std::abs(defect) < kHomomorphismTolerance) return std::string();
      return "ch(ab) - ch(a) - ch(b) = " + format_real(std::abs(defect));
    });
  }
  return run.take();
}

// ---- S^3 properties ---------------------------------------------------------------------

PropertyResult s3_calibration(const VerifyOptions& o) {
  PropertyRun run("s3_calibration", "rank");
  const S3Symbol a = S3Symbol::su2();
  run.run(0, {to_json(a)}, [&] {
    IndexOptions options = o.index;
    options.sizes = {8, 12, 16};
    const int analytic = analytic_index_s3(a, 8, options).index;
    const int chern = chern_integer(a, o, kChernDefectS3);
    return analytic == chern ? std::string() : mismatch("analytic vs chern_s3", analytic, chern);
  });
  return run.take();
}

S3Symbol random_s3(SymbolGenerator& gen) { return gen.s3_unitary_degree_one(gen.uniform_int(-1, 1)); }

PropertyResult s3_topological_agreement(const VerifyOptions& o) {
  PropertyRun run("s3_topological_agreement", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 8));
  for (int c = 0; c < o.s3_cases; ++c) {
    const S3Symbol a = random_s3(gen);
    run.run(c, {to_json(a)}, [&] {
      const int analytic = index_of(a, o);
      const int chern = chern_integer(a, o, kChernDefectS3);
      return analytic == chern ? std::string() : mismatch("analytic vs chern_s3", analytic, chern);
    });
  }
  return run.take();
}

PropertyResult s3_adjoint_antisymmetry(const VerifyOptions& o) {
  PropertyRun run("s3_adjoint_antisymmetry", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 9));
  for (int c = 0; c < o.s3_cases; ++c) {
    const S3Symbol a = random_s3(gen);
    run.run(c, {to_json(a)}, [&] {
      const int ia = index_of(a, o);
      const int istar = index_of(adjoint(a), o);
      return istar == -ia ? std::string() : mismatch("ind(a*)", istar, -ia);
    });
  }
  return run.take();
}

PropertyResult s3_stabilization(const VerifyOptions& o) {
  PropertyRun run("s3_stabilization", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 10));
  for (int c = 0; c < o.s3_cases; ++c) {
    const S3Symbol a = random_s3(gen);
    run.run(c, {to_json(a)}, [&] {
      const int ia = index_of(a, o);
      const int isum = index_of(direct_sum(a, S3Symbol::identity(1)), o);
      return isum == ia ? std::string() : mismatch("ind(a + I)", isum, ia);
    });
  }
  return run.take();
}

PropertyResult s3_homotopy(const VerifyOptions& o) {
  PropertyRun run("s3_homotopy", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 11));
  for (int c = 0; c < o.s3_cases; ++c) {
    const S3Symbol a = random_s3(gen);
    const CMatrix b = gen.near_identity(2, kHomotopyNorm) - CMatrix::Identity(2, 2);
    const auto path = [&a, &b](double t) {
      return multiply(a, S3Symbol::constant(CMatrix::Identity(2, 2) + t * b));
    };
    run.run(c, {to_json(a), to_json(path(1.0))}, [&] {
      const int start = index_of(path(0.0), o);
      for (int s = 1; s < kHomotopySamples; ++s) {
        const int here = index_of(path(homotopy_time(s)), o);
        if (here != start)
          return mismatch("index at t=" + format_real(homotopy_time(s)), here, start);
      }
      return std::string();
    });
  }
  return run.take();
}

PropertyResult s3_additivity(const VerifyOptions& o) {
  PropertyRun run("s3_additivity", "rank");
  SymbolGenerator gen(stream_seed(o.seed, 12));
  for (int c = 0; c < o.s3_pair_cases; ++c) {
    const S3Symbol a = random_s3(gen);
    const S3Symbol b = random_s3(gen);
    run.run(c, {to_json(a), to_json(b)}, [&] {
      const int ia = index_of(a, o);
      const int ib = index_of(b, o);
      const int iab = index_of(multiply(a, b), o);
      return iab == ia + ib ? std::string() : mismatch("ind(ab)", iab, ia + ib);
    });
  }
  return run.take();
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& p : properties)
    if (!p.passed()) return false;
  return true;
}

std::vector<std::string> VerifyReport::failed_properties() const {
  std::vector<std::string> out;
  for (const auto& p : properties)
    if (!p.passed()) out.push_back(p.name);
  return out;
}

namespace {

struct NamedProperty {
  const char* name;
  PropertyResult (*run)(const VerifyOptions&);
};

constexpr NamedProperty kProperties[] = {
    {"noether_s1", noether_s1},
    {"oracle_agreement_s1", oracle_agreement_s1},
    {"additivity_s1", additivity_s1},
    {"adjoint_antisymmetry_s1", adjoint_antisymmetry_s1},
    {"stabilization_s1", stabilization_s1},
    {"homotopy_s1", homotopy_s1},
    {"topological_agreement_s1", topological_agreement_s1},
    {"chern_homomorphism_s1", chern_homomorphism_s1},
    {"s3_calibration", s3_calibration},
    {"s3_topological_agreement", s3_topological_agreement},
    {"s3_adjoint_antisymmetry", s3_adjoint_antisymmetry},
    {"s3_stabilization", s3_stabilization},
    {"s3_homotopy", s3_homotopy},
    {"s3_additivity", s3_additivity},
};

}  // namespace

std::vector<std::string> verify_property_names() {
  std::vector<std::string> names;
  for (const auto& p : kProperties) names.emplace_back(p.name);
  return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const std::vector<std::string> names = verify_property_names();
  for (const auto& name : options.only)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw SymbolError("unknown verify property \"" + name + "\"");
  VerifyReport report;
  report.seed = options.seed;
  for (const auto& property : kProperties) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), property.name) == options.only.end())
      continue;
    report.properties.push_back(property.run(options));
  }
  return report;
}

json to_json(const VerifyReport& report) {
  json properties = json::array();
  for (const auto& p : report.properties) {
    json failures = json::array();
    for (const auto& f : p.failures)
      failures.push_back(json{{"case", f.case_index}, {"detail", f.detail}, {"symbols", f.symbols}});
    properties.push_back(json{{"name", p.name},
                              {"kind", p.kind},
                              {"cases", p.cases},
                              {"failed", p.failed},
                              {"passed", p.passed()},
                              {"failures", std::move(failures)}});
  }
  return json{{"seed", report.seed},
              {"passed", report.passed()},
              {"failed_properties", report.failed_properties()},
              {"properties", std::move(properties)}};
}

std::string format_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify seed " << report.seed << "\n";
  for (const auto& p : report.properties) {
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.cases - p.failed << "/"
        << p.cases << " cases)";
    if (!p.failures.empty()) out << ": case " << p.failures.front().case_index << ": "
                                 << p.failures.front().detail;
    out << "\n";
  }
  out << (report.passed() ? "all properties passed" : "some properties FAILED") << "\n";
  return out.str();
}

}  // namespace tidx
