#include "arraycode/tanner.hpp"

#include <algorithm>
#include <deque>

namespace arraycode {

TannerGraph::TannerGraph(const SparseBinaryMatrix& h) {
    h.validate();
    n_vars = h.n_cols;
    n_checks = h.n_rows;
    adj.assign(static_cast<std::size_t>(n_vars + n_checks), {});
    for (int i = 0; i < h.n_rows; ++i) {
        const int check = n_vars + i;
        for (int c : h.rows[static_cast<std::size_t>(i)]) {
            adj[static_cast<std::size_t>(c)].push_back(check);
            adj[static_cast<std::size_t>(check)].push_back(c);
        }
    }
}

namespace {

// Shortest cycle through `src` found by BFS with parent exclusion, bounded by
// the best length known so far. The graph is simple, so excluding the parent
// vertex excludes the parent edge.
int bfs_cycle(const std::vector<std::vector<int>>& adj, int src, int best,
              std::vector<int>& dist, std::vector<int>& parent) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(src)] = 0;
    parent[static_cast<std::size_t>(src)] = -1;
    queue.push_back(src);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (best != kAcyclic && 2 * dist[static_cast<std::size_t>(x)] >= best) break;
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (y == parent[static_cast<std::size_t>(x)]) continue;
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            } else {
                const int len = dist[static_cast<std::size_t>(x)] +
                                dist[static_cast<std::size_t>(y)] + 1;
                if (len < best) best = len;
            }
        }
    }
    return best;
}

}  // namespace

int girth(const TannerGraph& g) {
    const std::size_t n = g.adj.size();
    if (n == 0) throw std::invalid_argument("empty graph");
    int best = kAcyclic;
    std::vector<int> dist(n), parent(n);
    for (std::size_t src = 0; src < n; ++src) {
        best = bfs_cycle(g.adj, static_cast<int>(src), best, dist, parent);
        if (best == 4) break;  // bipartite minimum, cannot improve
    }
    return best;
}

int girth(const SparseBinaryMatrix& h) { return girth(TannerGraph(h)); }

namespace {

struct CycleCounter {
    const std::vector<std::vector<int>>& adj;
    int max_len;
    std::uint64_t cap;
    std::uint64_t expansions = 0;
    std::vector<std::uint8_t> on_path;
    std::map<int, std::uint64_t> counts;
    int start = 0;

    void dfs(int v, int depth) {
        if (++expansions > cap) {
            throw CycleBudgetExceeded("cycle counting exceeded node-expansion cap");
        }
        on_path[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == start) {
                if (depth + 1 >= 3) counts[depth + 1]++;
            } else if (w > start && !on_path[static_cast<std::size_t>(w)] &&
                       depth + 1 <= max_len - 1) {
                dfs(w, depth + 1);
            }
        }
        on_path[static_cast<std::size_t>(v)] = 0;
    }
};

}  // namespace

std::map<int, std::uint64_t> count_cycles(const SparseBinaryMatrix& h, int max_len,
                                          std::uint64_t expansion_cap) {
    if (max_len < 4 || max_len > 12 || max_len % 2 != 0) {
        throw std::invalid_argument("max_len must be even and in [4,12]");
    }
    TannerGraph g(h);
    CycleCounter counter{g.adj, max_len, expansion_cap, 0, {}, {}, 0};
    counter.on_path.assign(g.adj.size(), 0);
    for (std::size_t src = 0; src < g.adj.size(); ++src) {
        counter.start = static_cast<int>(src);
        counter.dfs(static_cast<int>(src), 0);
    }
    std::map<int, std::uint64_t> result;
    for (int len = 4; len <= max_len; len += 2) result[len] = 0;
    // Each cycle is traversed once per direction from its smallest vertex.
    for (const auto& [len, cnt] : counter.counts) {
        if (len >= 4 && len <= max_len) result[len] = cnt / 2;
    }
    return result;
}

int block_graph_girth(const std::vector<std::vector<std::uint8_t>>& blocks) {
    SparseBinaryMatrix m;
    m.n_rows = static_cast<int>(blocks.size());
    m.n_cols = blocks.empty() ? 0 : static_cast<int>(blocks.front().size());
    m.rows.resize(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (static_cast<int>(blocks[i].size()) != m.n_cols) {
            throw std::invalid_argument("ragged block mask");
        }
        for (int j = 0; j < m.n_cols; ++j) {
            if (blocks[i][static_cast<std::size_t>(j)]) m.rows[i].push_back(j);
        }
    }
    if (m.n_rows == 0 || m.n_cols == 0) return kAcyclic;
    return girth(m);
}

bool mask_has_forced_twelve_cycle(const std::vector<std::vector<std::uint8_t>>& blocks) {
    const std::size_t n_rows = blocks.size();
    const std::size_t n_cols = blocks.empty() ? 0 : blocks.front().size();
    for (const auto& row : blocks) {
        if (row.size() != n_cols) throw std::invalid_argument("ragged block mask");
    }
    // A 2x3 all-present submatrix means two rows share >= 3 common columns;
    // a 3x2 one means two columns share >= 3 common rows.
    for (std::size_t i = 0; i + 1 < n_rows; ++i) {
        for (std::size_t j = i + 1; j < n_rows; ++j) {
            int common = 0;
            for (std::size_t c = 0; c < n_cols; ++c) {
                if (blocks[i][c] && blocks[j][c] && ++common >= 3) return true;
            }
        }
    }
    for (std::size_t a = 0; a + 1 < n_cols; ++a) {
        for (std::size_t b = a + 1; b < n_cols; ++b) {
            int common = 0;
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (blocks[r][a] && blocks[r][b] && ++common >= 3) return true;
            }
        }
    }
    return false;
}

}  // namespace arraycode
