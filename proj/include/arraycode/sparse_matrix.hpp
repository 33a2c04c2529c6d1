#pragma once

#include <vector>

namespace arraycode {

/// Sparse binary matrix stored as per-row sorted lists of column indices.
struct SparseBinaryMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<std::vector<int>> rows;

    // Throws std::invalid_argument if dimensions and index lists disagree.
    void validate() const;

    std::vector<int> column_weights() const;
    std::vector<int> row_weights() const;
    std::size_t ones_count() const;

    friend bool operator==(const SparseBinaryMatrix& a, const SparseBinaryMatrix& b) {
        return a.n_rows == b.n_rows && a.n_cols == b.n_cols && a.rows == b.rows;
    }
};

}  // namespace arraycode
