#include "tidx/symbol_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <tuple>

#include <unistd.h>

#include "tidx/errors.hpp"

namespace tidx {

using nlohmann::json;

namespace {

const json& require_field(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

int require_int(const json& value, const std::string& where, bool non_negative) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  const auto v = value.get<long long>();
  if (non_negative && v < 0) throw ParseError(where + ": expected a non-negative integer");
  if (v < -1000000 || v > 1000000) throw ParseError(where + ": integer out of range");
  return static_cast<int>(v);
}

Complex parse_complex(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
    throw ParseError(where + ": expected a [re, im] pair");
  const Complex z(value[0].get<double>(), value[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ParseError(where + ": non-finite entry");
  return z;
}

CMatrix parse_matrix(const json& value, int rank, const std::string& where) {
  if (!value.is_array() || static_cast<int>(value.size()) != rank)
    throw ParseError(where + ": matrix must have " + std::to_string(rank) + " rows");
  CMatrix m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    const json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                       std::to_string(rank) + " entries");
    for (int j = 0; j < rank; ++j)
      m(i, j) = parse_complex(row[static_cast<std::size_t>(j)],
                              where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

LaurentSymbol parse_s1(const json& terms, int rank) {
  std::map<int, CMatrix> by_exponent;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string where = "terms[" + std::to_string(n) + "]";
    const json& term = terms[n];
    if (!term.is_object()) throw ParseError(where + ": expected an object");
    const int k = require_int(require_field(term, "k", where), where + ".k", false);
    CMatrix m = parse_matrix(require_field(term, "matrix", where), rank, where + ".matrix");
    if (!by_exponent.emplace(k, std::move(m)).second)
      throw ParseError(where + ": duplicate exponent k=" + std::to_string(k));
  }
  if (by_exponent.empty()) throw ParseError("terms: a symbol needs at least one term");
  const int k_min = by_exponent.begin()->first;
  const int k_max = by_exponent.rbegin()->first;
  std::vector<CMatrix> coeffs(static_cast<std::size_t>(k_max - k_min + 1),
                              CMatrix::Zero(rank, rank));
  for (auto& [k, m] : by_exponent) coeffs[static_cast<std::size_t>(k - k_min)] = std::move(m);
  return LaurentSymbol(rank, k_min, std::move(coeffs));
}

S3Symbol parse_s3(const json& terms, int rank) {
  std::set<S3Exponents> seen;
  std::vector<S3MonomialTerm> out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string where = "terms[" + std::to_string(n) + "]";
    const json& term = terms[n];
    if (!term.is_object()) throw ParseError(where + ": expected an object");
    S3Exponents e;
    e.p = require_int(require_field(term, "p", where), where + ".p", true);
    e.q = require_int(require_field(term, "q", where), where + ".q", true);
    e.s = require_int(require_field(term, "s", where), where + ".s", true);
    e.t = require_int(require_field(term, "t", where), where + ".t", true);
    if (!seen.insert(e).second)
      throw ParseError(where + ": duplicate exponents (p,q,s,t)=(" + std::to_string(e.p) + "," +
                       std::to_string(e.q) + "," + std::to_string(e.s) + "," +
                       std::to_string(e.t) + ")");
    out.push_back({e, parse_matrix(require_field(term, "matrix", where), rank, where + ".matrix")});
  }
  if (out.empty()) throw ParseError("terms: a symbol needs at least one term");
  S3Symbol a(rank, out);
  if (a.terms().empty()) throw ParseError("terms: symbol is identically zero");
  return a;
}

}  // namespace

AnySymbol parse_symbol(const json& doc) {
  if (!doc.is_object()) throw ParseError("symbol document must be an object");
  const json& manifold = require_field(doc, "manifold", "document");
  if (!manifold.is_string()) throw ParseError("manifold: expected \"S1\" or \"S3\"");
  const std::string name = manifold.get<std::string>();
  const int rank = require_int(require_field(doc, "rank", "document"), "rank", true);
  if (rank < 1) throw ParseError("rank: must be positive");
  const json& terms = require_field(doc, "terms", "document");
  if (!terms.is_array()) throw ParseError("terms: expected an array");
  try {
    if (name == "S1") return parse_s1(terms, rank);
    if (name == "S3") return parse_s3(terms, rank);
  } catch (const SymbolError& e) {
    throw ParseError(std::string("invalid symbol: ") + e.what());
  }
  throw ParseError("manifold: expected \"S1\" or \"S3\", got \"" + name + "\"");
}

AnySymbol parse_symbol_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_symbol(doc);
}

AnySymbol read_symbol_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open symbol file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_symbol_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const LaurentSymbol& a) {
  json terms = json::array();
  for (int k = a.k_min(); k <= a.k_max(); ++k) {
    const CMatrix c = a.coeff(k);
    if (c.isZero(0.0)) continue;
    terms.push_back(json{{"k", k}, {"matrix", matrix_to_json(c)}});
  }
  return json{{"manifold", "S1"}, {"rank", a.rank()}, {"terms", std::move(terms)}};
}

json to_json(const S3Symbol& a) {
  json terms = json::array();
  for (const auto& [e, c] : a.terms())
    terms.push_back(json{{"p", e.p}, {"q", e.q}, {"s", e.s}, {"t", e.t},
                         {"matrix", matrix_to_json(c)}});
  return json{{"manifold", "S3"}, {"rank", a.rank()}, {"terms", std::move(terms)}};
}

json symbol_to_json(const AnySymbol& a) {
  return std::visit([](const auto& s) { return to_json(s); }, a);
}

std::string symbol_document_text(const AnySymbol& a) {
  const json doc = symbol_to_json(a);
  const bool s1 = manifold_of(a) == Manifold::kS1;
  std::ostringstream out;
  out << "{\n  \"manifold\": " << doc["manifold"].dump() << ",\n  \"rank\": " << doc["rank"].dump()
      << ",\n  \"terms\": [";
  const json& terms = doc["terms"];
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const json& t = terms[j];
    out << (j == 0 ? "\n    {" : ",\n    {");
    if (s1)
      out << "\"k\": " << t["k"].dump();
    else
      out << "\"p\": " << t["p"].dump() << ", \"q\": " << t["q"].dump() << ", \"s\": "
          << t["s"].dump() << ", \"t\": " << t["t"].dump();
    out << ", \"matrix\": " << t["matrix"].dump() << "}";
  }
  out << (terms.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target = path.has_parent_path() ? path : fs::path(".") / path;
  const fs::path temp =
      target.parent_path() / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw std::runtime_error("cannot rename " + temp.string() + " to " + target.string() + ": " +
                             ec.message());
  }
}

}  // namespace tidx
