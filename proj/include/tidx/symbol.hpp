#pragma once

#include <string_view>
#include <variant>

#include "tidx/laurent_symbol.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx {

enum class Manifold { kS1, kS3 };

/// A symbol on either sphere; binary operations require matching kinds.
using AnySymbol = std::variant<LaurentSymbol, S3Symbol>;

Manifold manifold_of(const AnySymbol& a);
std::string_view manifold_name(Manifold m);
int rank_of(const AnySymbol& a);

/// Throws SymbolError on kind or rank mismatch.
AnySymbol multiply(const AnySymbol& a, const AnySymbol& b);
AnySymbol direct_sum(const AnySymbol& a, const AnySymbol& b);
AnySymbol adjoint(const AnySymbol& a);

}  // namespace tidx
