#pragma once

#include <cstdint>

#include "arraycode/sparse_matrix.hpp"

namespace arraycode {

/// Rank over GF(2) by row reduction on densified bit rows.
int gf2_rank(const SparseBinaryMatrix& h);

/// y = H * x over GF(2); x indexed by column.
std::vector<std::uint8_t> gf2_matvec(const SparseBinaryMatrix& h,
                                     const std::vector<std::uint8_t>& x);

}  // namespace arraycode
