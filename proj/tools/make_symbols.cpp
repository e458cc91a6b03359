// Regenerates the shipped example symbol files: make_symbols <output directory>.
#include <filesystem>
#include <iostream>
#include <string>

#include "tidx/generators.hpp"
#include "tidx/symbol_io.hpp"

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const tidx::AnySymbol& a) {
  tidx::write_file_atomic(dir / (name + ".json"), tidx::symbol_document_text(a));
  std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
}

std::string signed_name(int k) {
  if (k == 0) return "0";
  return (k < 0 ? "neg" : "pos") + std::to_string(k < 0 ? -k : k);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tidx;
  if (argc != 2) {
    std::cerr << "usage: make_symbols <output directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  for (int m = -3; m <= 3; ++m) write(dir, "s1_z_pow_" + signed_name(m), LaurentSymbol::monomial(m));
  write(dir, "s1_diag_z_zinv2",
        direct_sum(LaurentSymbol::monomial(1), LaurentSymbol::monomial(-2)));
  SymbolGenerator gen(20261015);
  write(dir, "s1_random_rank3", gen.matrix_invertible(3));

  for (int k = -2; k <= 2; ++k) write(dir, "s3_su2_pow_" + signed_name(k), power(S3Symbol::su2(), k));
  write(dir, "s3_z1", S3Symbol::monomial({1, 0, 0, 0}));
  return 0;
}
