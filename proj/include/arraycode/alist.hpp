#pragma once

#include <iosfwd>
#include <string>

#include "arraycode/sparse_matrix.hpp"

namespace arraycode {

/// Serializes H in the alist format: line 1 `n m`, line 2 `max_cw max_rw`,
/// line 3 the n column weights, line 4 the m row weights, then n per-column
/// row-index lines and m per-row column-index lines, 1-based, zero-padded to
/// the respective maximum weight. Rejects zero-weight columns.
std::string write_alist(const SparseBinaryMatrix& h);
void write_alist(std::ostream& out, const SparseBinaryMatrix& h);

/// Parses an alist document, verifying weight/index self-consistency.
/// Throws std::runtime_error naming the offending line on malformed input.
SparseBinaryMatrix read_alist(std::istream& in);
SparseBinaryMatrix read_alist(const std::string& text);

}  // namespace arraycode
