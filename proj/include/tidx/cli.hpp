#pragma once

#include <iosfwd>

namespace tidx {

/// Process exit statuses of the tidx command.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFailed = 1,         // index disagreement, failed verification property, I/O failure
  kExitParse = 2,          // unreadable symbol file or bad command line
  kExitNotInvertible = 3,  // symbol vanishes somewhere on the manifold
  kExitNumerics = 4,       // unstabilized kernels, residual failure, non-integral Chern value
};

/// Entry point of the tidx command line (subcommands index, chern, winding, verify,
/// convergence). Documents go to --out (written atomically) or to `out`; summaries and
/// diagnostics go to `out` / `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tidx
