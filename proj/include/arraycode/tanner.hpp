#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "arraycode/sparse_matrix.hpp"

namespace arraycode {

/// Returned by girth() when the graph is acyclic.
inline constexpr int kAcyclic = std::numeric_limits<int>::max();

/// Bipartite adjacency of a parity-check matrix. Variable nodes come first
/// (ids 0..n-1), check nodes follow (ids n..n+m-1).
struct TannerGraph {
    int n_vars = 0;
    int n_checks = 0;
    std::vector<std::vector<int>> adj;

    explicit TannerGraph(const SparseBinaryMatrix& h);
};

/// Shortest cycle length via per-source BFS with parent-edge exclusion;
/// kAcyclic if the graph has no cycle.
int girth(const TannerGraph& g);
int girth(const SparseBinaryMatrix& h);

struct CycleBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact per-length counts of distinct cycles of length 4..max_len.
/// Throws CycleBudgetExceeded when the node-expansion budget runs out.
std::map<int, std::uint64_t> count_cycles(const SparseBinaryMatrix& h, int max_len,
                                          std::uint64_t expansion_cap = 1'000'000'000ULL);

/// Girth of the block-presence bipartite graph of a mask; kAcyclic if none.
/// A value > 6 certifies that no 12-cycle traversing six distinct blocks exists.
int block_graph_girth(const std::vector<std::vector<std::uint8_t>>& blocks);

/// True when the mask contains a fully populated 2x3 or 3x2 submatrix. Such a
/// submatrix supports a 12-cycle through six distinct blocks (each traversed
/// twice) whose exponent condition is identically zero, so the cycle survives
/// every choice of circulant exponents; a mask without the pattern admits no
/// 12-cycle through six distinct blocks at odd modulus.
bool mask_has_forced_twelve_cycle(const std::vector<std::vector<std::uint8_t>>& blocks);

}  // namespace arraycode
