#include "arraycode/alist.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arraycode {

namespace {

std::vector<std::vector<int>> columns_of(const SparseBinaryMatrix& h) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(h.n_cols));
    for (int r = 0; r < h.n_rows; ++r) {
        for (int c : h.rows[static_cast<std::size_t>(r)]) {
            cols[static_cast<std::size_t>(c)].push_back(r);
        }
    }
    return cols;
}

void write_index_line(std::ostream& out, const std::vector<int>& indices, std::size_t pad_to) {
    for (std::size_t i = 0; i < pad_to; ++i) {
        if (i) out << ' ';
        out << (i < indices.size() ? indices[i] + 1 : 0);
    }
    out << '\n';
}

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "alist parse error at line " << line << ": " << what;
    throw std::runtime_error(msg.str());
}

}  // namespace

void write_alist(std::ostream& out, const SparseBinaryMatrix& h) {
    h.validate();
    const auto cols = columns_of(h);
    for (const auto& col : cols) {
        if (col.empty()) throw std::invalid_argument("alist cannot encode a zero-weight column");
    }
    std::size_t max_cw = 0, max_rw = 0;
    for (const auto& col : cols) max_cw = std::max(max_cw, col.size());
    for (const auto& row : h.rows) max_rw = std::max(max_rw, row.size());

    out << h.n_cols << ' ' << h.n_rows << '\n';
    out << max_cw << ' ' << max_rw << '\n';
    for (std::size_t j = 0; j < cols.size(); ++j) out << (j ? " " : "") << cols[j].size();
    out << '\n';
    for (std::size_t i = 0; i < h.rows.size(); ++i) out << (i ? " " : "") << h.rows[i].size();
    out << '\n';
    for (const auto& col : cols) write_index_line(out, col, max_cw);
    for (const auto& row : h.rows) write_index_line(out, row, max_rw);
}

std::string write_alist(const SparseBinaryMatrix& h) {
    std::ostringstream out;
    write_alist(out, h);
    return out.str();
}

SparseBinaryMatrix read_alist(std::istream& in) {
    int line_no = 0;
    auto next_line = [&in, &line_no](std::vector<long long>& out) {
        std::string line;
        if (!std::getline(in, line)) fail(line_no + 1, "unexpected end of input");
        ++line_no;
        out.clear();
        std::istringstream fields(line);
        long long v;
        while (fields >> v) out.push_back(v);
        if (!fields.eof()) fail(line_no, "non-numeric token");
    };

    std::vector<long long> tok;
    next_line(tok);
    if (tok.size() != 2 || tok[0] < 1 || tok[1] < 1) fail(line_no, "expected `n m`");
    const int n = static_cast<int>(tok[0]);
    const int m = static_cast<int>(tok[1]);

    next_line(tok);
    if (tok.size() != 2 || tok[0] < 1 || tok[1] < 0) fail(line_no, "expected `max_cw max_rw`");
    const int max_cw = static_cast<int>(tok[0]);
    const int max_rw = static_cast<int>(tok[1]);

    next_line(tok);
    if (static_cast<int>(tok.size()) != n) fail(line_no, "expected n column weights");
    std::vector<int> col_w(tok.begin(), tok.end());
    for (int w : col_w) {
        if (w < 1 || w > max_cw) fail(line_no, "column weight out of range");
    }
    next_line(tok);
    if (static_cast<int>(tok.size()) != m) fail(line_no, "expected m row weights");
    std::vector<int> row_w(tok.begin(), tok.end());
    for (int w : row_w) {
        if (w < 0 || w > max_rw) fail(line_no, "row weight out of range");
    }

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        next_line(tok);
        if (static_cast<int>(tok.size()) != max_cw) fail(line_no, "column line not padded to max weight");
        auto& col = cols[static_cast<std::size_t>(j)];
        for (int i = 0; i < max_cw; ++i) {
            const long long v = tok[static_cast<std::size_t>(i)];
            if (i < col_w[static_cast<std::size_t>(j)]) {
                if (v < 1 || v > m) fail(line_no, "row index out of range");
                col.push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                fail(line_no, "nonzero padding entry");
            }
        }
    }

    SparseBinaryMatrix h;
    h.n_rows = m;
    h.n_cols = n;
    h.rows.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        next_line(tok);
        if (static_cast<int>(tok.size()) != max_rw) fail(line_no, "row line not padded to max weight");
        auto& row = h.rows[static_cast<std::size_t>(j)];
        for (int i = 0; i < max_rw; ++i) {
            const long long v = tok[static_cast<std::size_t>(i)];
            if (i < row_w[static_cast<std::size_t>(j)]) {
                if (v < 1 || v > n) fail(line_no, "column index out of range");
                row.push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                fail(line_no, "nonzero padding entry");
            }
        }
        if (!std::is_sorted(row.begin(), row.end())) std::sort(row.begin(), row.end());
    }

    // Cross-check the two redundant halves of the document.
    auto rebuilt_cols = columns_of(h);
    for (int j = 0; j < n; ++j) {
        auto& given = cols[static_cast<std::size_t>(j)];
        std::sort(given.begin(), given.end());
        if (given != rebuilt_cols[static_cast<std::size_t>(j)]) {
            fail(line_no, "column and row index lists disagree");
        }
    }
    h.validate();
    return h;
}

SparseBinaryMatrix read_alist(const std::string& text) {
    std::istringstream in(text);
    return read_alist(in);
}

}  // namespace arraycode
