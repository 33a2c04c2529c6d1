#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arraycode/modulus.hpp"
#include "arraycode/sparse_matrix.hpp"

namespace arraycode {

/// Reduced fraction with non-negative denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
};

using Mask = std::vector<std::vector<std::uint8_t>>;

/// Identity of a (shortened, possibly masked) array code: modulus, block-row
/// labels a_i, retained block-column labels c_j, optional mask of present blocks.
struct ArrayCodeSpec {
    Modulus q;
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::optional<Mask> mask;

    ArrayCodeSpec(Modulus q_, std::vector<int> rows, std::vector<int> cols,
                  std::optional<Mask> mask_ = std::nullopt);

    int r() const { return static_cast<int>(row_labels.size()); }
    int s() const { return static_cast<int>(col_labels.size()); }

    bool block_present(int i, int j) const {
        return !mask || (*mask)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
    }

    /// Exponent of block (i, j): a_i * c_j mod q.
    int exponent(int i, int j) const {
        long long e = static_cast<long long>(row_labels[static_cast<std::size_t>(i)]) *
                      col_labels[static_cast<std::size_t>(j)];
        return static_cast<int>(e % q.value());
    }
};

/// q x q matrix with entry (i, j) = 1 iff j == i + e (mod q).
SparseBinaryMatrix circulant_permutation(Modulus q, long long e);

/// Expanded (r*q) x (s*q) parity-check matrix of the spec.
SparseBinaryMatrix build_parity_check(const ArrayCodeSpec& spec);

/// True iff the row labels form an arithmetic progression with nonzero
/// common difference (vacuously true for r <= 2).
bool is_proper(const ArrayCodeSpec& spec);

/// 1 - r/s; defined for unmasked specs only.
Rational designed_rate(const ArrayCodeSpec& spec);

/// 1 - rank_GF2(H)/n_cols.
Rational actual_rate(const SparseBinaryMatrix& h);

}  // namespace arraycode
