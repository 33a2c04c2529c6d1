#include "arraycode/code_model.hpp"

#include <algorithm>
#include <set>

namespace arraycode {

void SparseBinaryMatrix::validate() const {
    if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("negative dimension");
    if (static_cast<int>(rows.size()) != n_rows) {
        throw std::invalid_argument("row list count does not match n_rows");
    }
    for (const auto& row : rows) {
        int prev = -1;
        for (int c : row) {
            if (c <= prev) throw std::invalid_argument("row indices not strictly increasing");
            if (c >= n_cols) throw std::invalid_argument("column index out of range");
            prev = c;
        }
    }
}

std::vector<int> SparseBinaryMatrix::column_weights() const {
    std::vector<int> w(static_cast<std::size_t>(n_cols), 0);
    for (const auto& row : rows)
        for (int c : row) w[static_cast<std::size_t>(c)]++;
    return w;
}

std::vector<int> SparseBinaryMatrix::row_weights() const {
    std::vector<int> w;
    w.reserve(rows.size());
    for (const auto& row : rows) w.push_back(static_cast<int>(row.size()));
    return w;
}

std::size_t SparseBinaryMatrix::ones_count() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

namespace {

void check_labels(const std::vector<int>& labels, std::uint32_t q, const char* what) {
    if (labels.empty()) throw std::invalid_argument(std::string(what) + " labels empty");
    if (labels.size() > q) throw std::invalid_argument(std::string(what) + " label count exceeds q");
    std::set<int> seen;
    for (int v : labels) {
        if (v < 0 || v >= static_cast<int>(q)) {
            throw std::invalid_argument(std::string(what) + " label out of [0,q-1]");
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument(std::string(what) + " labels not distinct");
        }
    }
}

}  // namespace

ArrayCodeSpec::ArrayCodeSpec(Modulus q_, std::vector<int> rows, std::vector<int> cols,
                             std::optional<Mask> mask_)
    : q(q_), row_labels(std::move(rows)), col_labels(std::move(cols)), mask(std::move(mask_)) {
    check_labels(row_labels, q.value(), "row");
    check_labels(col_labels, q.value(), "column");
    if (mask) {
        if (mask->size() != row_labels.size()) {
            throw std::invalid_argument("mask row count does not match r");
        }
        for (const auto& mrow : *mask) {
            if (mrow.size() != col_labels.size()) {
                throw std::invalid_argument("mask column count does not match s");
            }
        }
    }
}

SparseBinaryMatrix circulant_permutation(Modulus q, long long e) {
    const int n = static_cast<int>(q.value());
    const int shift = static_cast<int>(((e % n) + n) % n);
    SparseBinaryMatrix p;
    p.n_rows = n;
    p.n_cols = n;
    p.rows.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        p.rows[static_cast<std::size_t>(i)] = {(i + shift) % n};
    }
    return p;
}

SparseBinaryMatrix build_parity_check(const ArrayCodeSpec& spec) {
    const int q = static_cast<int>(spec.q.value());
    const int r = spec.r();
    const int s = spec.s();
    SparseBinaryMatrix h;
    h.n_rows = r * q;
    h.n_cols = s * q;
    h.rows.resize(static_cast<std::size_t>(h.n_rows));
    for (int i = 0; i < r; ++i) {
        for (int y = 0; y < q; ++y) {
            auto& row = h.rows[static_cast<std::size_t>(i * q + y)];
            for (int j = 0; j < s; ++j) {
                if (!spec.block_present(i, j)) continue;
                const int e = spec.exponent(i, j);
                row.push_back(j * q + (y + e) % q);
            }
        }
    }
    return h;
}

bool is_proper(const ArrayCodeSpec& spec) {
    const auto& a = spec.row_labels;
    if (a.size() <= 2) return true;  // vacuous / any two points form an A.P.
    const int d = a[1] - a[0];
    if (d == 0) return false;
    for (std::size_t i = 2; i < a.size(); ++i) {
        if (a[i] - a[i - 1] != d) return false;
    }
    return true;
}

Rational designed_rate(const ArrayCodeSpec& spec) {
    if (spec.mask) throw std::invalid_argument("designed rate is defined for unmasked specs");
    return Rational(spec.s() - spec.r(), spec.s());
}

}  // namespace arraycode
