#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "tidx/errors.hpp"
#include "tidx/symbol_io.hpp"

namespace tidx {
namespace {

namespace fs = std::filesystem;

std::vector<fs::path> shipped_files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(TIDX_DATA_DIR))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SymbolIo, ShippedFilesRoundTrip) {
  const auto files = shipped_files();
  ASSERT_GE(files.size(), 15u);
  for (const auto& path : files) {
    const AnySymbol a = read_symbol_file(path);
    EXPECT_EQ(parse_symbol(symbol_to_json(a)), a) << path;
    EXPECT_EQ(parse_symbol_text(symbol_document_text(a)), a) << path;
  }
}

TEST(SymbolIo, ParsesS1Document) {
  const AnySymbol a = parse_symbol_text(R"({"manifold": "S1", "rank": 1,
      "terms": [{"k": -1, "matrix": [[[1, 0]]]}, {"k": 2, "matrix": [[[0, 2.5]]]}]})");
  const auto& s = std::get<LaurentSymbol>(a);
  EXPECT_EQ(s.k_min(), -1);
  EXPECT_EQ(s.k_max(), 2);
  EXPECT_EQ(s.coeff(2)(0, 0), Complex(0.0, 2.5));
  EXPECT_EQ(s.coeff(0)(0, 0), Complex(0.0, 0.0));
}

TEST(SymbolIo, ParsesS3Document) {
  const AnySymbol a = parse_symbol_text(R"({"manifold": "S3", "rank": 2, "terms": [
      {"p": 1, "q": 0, "s": 0, "t": 0, "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]},
      {"p": 0, "q": 0, "s": 0, "t": 1, "matrix": [[[0, 0], [-1, 0]], [[0, 0], [0, 0]]]},
      {"p": 0, "q": 1, "s": 0, "t": 0, "matrix": [[[0, 0], [0, 0]], [[1, 0], [0, 0]]]},
      {"p": 0, "q": 0, "s": 1, "t": 0, "matrix": [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]}]})");
  EXPECT_EQ(std::get<S3Symbol>(a), S3Symbol::su2());
}

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_symbol_text(text);
    FAIL() << "expected ParseError for " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(SymbolIo, RejectsMalformedDocuments) {
  expect_parse_error("{", "malformed JSON");
  expect_parse_error("[]", "must be an object");
  expect_parse_error(R"({"rank": 1, "terms": []})", "manifold");
  expect_parse_error(R"({"manifold": "S2", "rank": 1, "terms": [{"k": 0, "matrix": [[[1, 0]]]}]})",
                     "S2");
  expect_parse_error(R"({"manifold": "S1", "rank": 0, "terms": []})", "rank");
  expect_parse_error(R"({"manifold": "S1", "rank": 1, "terms": []})", "at least one term");
  expect_parse_error(R"({"manifold": "S1", "rank": 2, "terms": [{"k": 0, "matrix": [[[1, 0]]]}]})",
                     "2 rows");
  expect_parse_error(R"({"manifold": "S1", "rank": 1, "terms": [{"k": 0, "matrix": [[[1]]]}]})",
                     "[re, im]");
  expect_parse_error(R"({"manifold": "S1", "rank": 1, "terms": [{"k": 0.5, "matrix": [[[1, 0]]]}]})",
                     "integer");
  expect_parse_error(
      R"({"manifold": "S3", "rank": 1, "terms": [{"p": -1, "q": 0, "s": 0, "t": 0, "matrix": [[[1, 0]]]}]})",
      "non-negative");
  expect_parse_error(R"({"manifold": "S1", "rank": 1, "terms": [{"k": 0, "matrix": [[[0, 0]]]}]})",
                     "identically zero");
}

TEST(SymbolIo, RejectsDuplicateExponents) {
  expect_parse_error(R"({"manifold": "S1", "rank": 1, "terms": [
      {"k": 1, "matrix": [[[1, 0]]]}, {"k": 1, "matrix": [[[2, 0]]]}]})",
                     "duplicate exponent");
  expect_parse_error(R"({"manifold": "S3", "rank": 1, "terms": [
      {"p": 1, "q": 0, "s": 0, "t": 0, "matrix": [[[1, 0]]]},
      {"p": 1, "q": 0, "s": 0, "t": 0, "matrix": [[[1, 0]]]}]})",
                     "duplicate exponents");
}

TEST(SymbolIo, MissingFileIsParseError) {
  EXPECT_THROW(read_symbol_file("/nonexistent/symbol.json"), ParseError);
}

TEST(SymbolIo, AtomicWriteReplacesContents) {
  const fs::path dir = fs::temp_directory_path() / "tidx_io_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.txt";
  write_file_atomic(target, "first");
  write_file_atomic(target, "second");
  std::ifstream in(target);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(contents, "second");
  for (const auto& entry : fs::directory_iterator(dir))
    EXPECT_EQ(entry.path().filename(), "out.txt") << "temporary file left behind";
  fs::remove_all(dir);
}

}  // namespace
}  // namespace tidx
