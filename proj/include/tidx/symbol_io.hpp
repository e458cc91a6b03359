#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tidx/symbol.hpp"

namespace tidx {

/// Symbol documents:
///   {"manifold": "S1", "rank": r, "terms": [{"k": -1, "matrix": [[[re, im], ...], ...]}, ...]}
///   {"manifold": "S3", "rank": r, "terms": [{"p": 1, "q": 0, "s": 0, "t": 0, "matrix": ...}]}
/// Matrices are row-major arrays of [re, im] pairs. Duplicate exponent keys are rejected.
AnySymbol parse_symbol(const nlohmann::json& doc);
AnySymbol parse_symbol_text(const std::string& text);
AnySymbol read_symbol_file(const std::filesystem::path& path);

nlohmann::json to_json(const LaurentSymbol& a);
nlohmann::json to_json(const S3Symbol& a);
nlohmann::json symbol_to_json(const AnySymbol& a);

/// Human-friendly document text: one line per term, exponents before the matrix.
std::string symbol_document_text(const AnySymbol& a);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const CMatrix& m);

/// Writes through a temporary sibling file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace tidx
