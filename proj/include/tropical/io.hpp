#pragma once

// MatrixText: one row per line, entries separated by spaces or tabs, each
// entry either "E" (ε) or a base-10 int64. Blank lines and lines whose first
// non-blank character is '#' are skipped on input. Output is canonical:
// single spaces, '\n' line endings, trailing newline.

#include <span>
#include <string>
#include <string_view>

#include "tropical/dense_matrix.hpp"
#include "tropical/semiring.hpp"

namespace tropical::io {

/// Throws EmptyInput, RaggedRows or BadToken.
Matrix parse_matrix(std::string_view text);

std::string format_matrix(const Matrix& m);

/// Frames separated by one blank line, each independently parseable.
std::string format_frames(std::span<const Matrix> frames);

/// "E" or an int64 literal; anything else throws BadToken(1, 1, token).
TropicalValue parse_scalar(std::string_view token);

std::string format_scalar(TropicalValue v);

}  // namespace tropical::io
