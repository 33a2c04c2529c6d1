#include "arraycode/gf2.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arraycode/code_model.hpp"

namespace arraycode {

int gf2_rank(const SparseBinaryMatrix& h) {
    const std::size_t words = (static_cast<std::size_t>(h.n_cols) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> dense;
    dense.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        std::vector<std::uint64_t> bits(words, 0);
        for (int c : row) bits[static_cast<std::size_t>(c) / 64] ^= 1ULL << (c % 64);
        dense.push_back(std::move(bits));
    }

    int rank = 0;
    std::size_t n_rows = dense.size();
    for (int col = 0; col < h.n_cols && rank < static_cast<int>(n_rows); ++col) {
        const std::size_t w = static_cast<std::size_t>(col) / 64;
        const std::uint64_t bit = 1ULL << (col % 64);
        std::size_t pivot = n_rows;
        for (std::size_t i = static_cast<std::size_t>(rank); i < n_rows; ++i) {
            if (dense[i][w] & bit) { pivot = i; break; }
        }
        if (pivot == n_rows) continue;
        std::swap(dense[static_cast<std::size_t>(rank)], dense[pivot]);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i != static_cast<std::size_t>(rank) && (dense[i][w] & bit)) {
                for (std::size_t k = w; k < words; ++k) {
                    dense[i][k] ^= dense[static_cast<std::size_t>(rank)][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint8_t> gf2_matvec(const SparseBinaryMatrix& h,
                                     const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != h.n_cols) throw std::invalid_argument("length mismatch");
    std::vector<std::uint8_t> y(static_cast<std::size_t>(h.n_rows), 0);
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        std::uint8_t acc = 0;
        for (int c : h.rows[i]) acc ^= x[static_cast<std::size_t>(c)];
        y[i] = acc;
    }
    return y;
}

Rational actual_rate(const SparseBinaryMatrix& h) {
    return Rational(h.n_cols - gf2_rank(h), h.n_cols);
}

}  // namespace arraycode
