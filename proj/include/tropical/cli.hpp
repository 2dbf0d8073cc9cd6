#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tropical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/**
 * Runs one invocation of the command-line tool.
 *
 *   add    A.mpx B.mpx            A ⊕ B
 *   mul    A.mpx B.mpx            A ⊗ B
 *   smul   --scalar TOK A.mpx     TOK ⊗ A
 *   pow    --k N A.mpx            A^(N)
 *   evolve --k N [--trajectory] A.mpx X0.mpx
 *
 * `args` excludes the program name. A path of "-" reads `in`. Results go to
 * `out` (or to --output), one-line diagnostics to `err`. Returns 0 on
 * success, 1 on a computation/input error, 2 on a usage error.
 */
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
