#include "tidx/symbol.hpp"

#include "tidx/errors.hpp"

namespace tidx {

Manifold manifold_of(const AnySymbol& a) {
  return std::holds_alternative<LaurentSymbol>(a) ? Manifold::kS1 : Manifold::kS3;
}

std::string_view manifold_name(Manifold m) { return m == Manifold::kS1 ? "S1" : "S3"; }

int rank_of(const AnySymbol& a) {
  return std::visit([](const auto& s) { return s.rank(); }, a);
}

namespace {

template <typename Op>
AnySymbol same_kind(const AnySymbol& a, const AnySymbol& b, Op op, const char* name) {
  if (a.index() != b.index())
    throw SymbolError(std::string("kind mismatch in ") + name + ": " +
                      std::string(manifold_name(manifold_of(a))) + " vs " +
                      std::string(manifold_name(manifold_of(b))));
  if (const auto* la = std::get_if<LaurentSymbol>(&a)) return op(*la, std::get<LaurentSymbol>(b));
  return op(std::get<S3Symbol>(a), std::get<S3Symbol>(b));
}

}  // namespace

AnySymbol multiply(const AnySymbol& a, const AnySymbol& b) {
  return same_kind(
      a, b, [](const auto& x, const auto& y) -> AnySymbol { return multiply(x, y); }, "multiply");
}

AnySymbol direct_sum(const AnySymbol& a, const AnySymbol& b) {
  return same_kind(
      a, b, [](const auto& x, const auto& y) -> AnySymbol { return direct_sum(x, y); },
      "direct_sum");
}

AnySymbol adjoint(const AnySymbol& a) {
  return std::visit([](const auto& s) -> AnySymbol { return adjoint(s); }, a);
}

}  // namespace tidx
