#include <gtest/gtest.h>

#include "tidx/errors.hpp"
#include "tidx/verify.hpp"

namespace tidx {
namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.scalar_cases = 5;
  o.pair_cases = 3;
  o.s3_cases = 1;
  o.s3_pair_cases = 1;
  return o;
}

TEST(Verify, SmallSuitePasses) {
  const VerifyReport r = run_verify(small_options());
  EXPECT_TRUE(r.passed()) << format_text(r);
  EXPECT_EQ(r.properties.size(), verify_property_names().size());
}

TEST(Verify, ReportIsDeterministic) {
  VerifyOptions o = small_options();
  o.only = {"oracle_agreement_s1", "additivity_s1", "s3_homotopy"};
  const std::string first = to_json(run_verify(o)).dump();
  const std::string second = to_json(run_verify(o)).dump();
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.find("_ms"), std::string::npos) << "no timings in verify reports";
}

TEST(Verify, InjectedFaultNamesRankProperties) {
  VerifyOptions o = small_options();
  o.index.tol = 1.0;
  const VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.passed());
  const auto failed = r.failed_properties();
  for (const auto& p : r.properties) {
    const bool named = std::find(failed.begin(), failed.end(), p.name) != failed.end();
    EXPECT_EQ(named, p.kind == "rank") << p.name;
    if (p.kind == "rank") {
      ASSERT_FALSE(p.failures.empty());
      EXPECT_FALSE(p.failures.front().symbols.empty()) << "offending symbol serialized";
    }
  }
  const nlohmann::json j = to_json(r);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["failed_properties"].size(), failed.size());
}

TEST(Verify, FailuresCarryReplayableSymbols) {
  VerifyOptions o = small_options();
  o.index.tol = 1.0;
  o.only = {"additivity_s1"};
  const VerifyReport r = run_verify(o);
  ASSERT_EQ(r.properties.size(), 1u);
  const CaseFailure& f = r.properties[0].failures.at(0);
  ASSERT_EQ(f.symbols.size(), 2u);
  EXPECT_EQ(f.symbols[0]["manifold"], "S1");
}

TEST(Verify, UnknownPropertyRejected) {
  VerifyOptions o = small_options();
  o.only = {"no_such_property"};
  EXPECT_THROW(run_verify(o), SymbolError);
}

TEST(Verify, DifferentSeedsDifferentCases) {
  VerifyOptions a = small_options();
  a.index.tol = 1.0;
  a.only = {"adjoint_antisymmetry_s1"};
  VerifyOptions b = a;
  b.seed = 1;
  EXPECT_NE(to_json(run_verify(a)).dump(), to_json(run_verify(b)).dump());
}

}  // namespace
}  // namespace tidx
