#include "arraycode/cycle_equations.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace arraycode {

bool operator<(const CycleEquation& a, const CycleEquation& b) {
    if (a.cycle_len != b.cycle_len) return a.cycle_len < b.cycle_len;
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    return a.coeffs < b.coeffs;
}

std::vector<int> canonicalize_coefficients(std::vector<int> raw) {
    raw.erase(std::remove(raw.begin(), raw.end(), 0), raw.end());
    if (raw.size() < 2) return {};
    int g = 0;
    for (int c : raw) g = std::gcd(g, c < 0 ? -c : c);
    for (int& c : raw) c /= g;
    std::vector<int> pos = raw;
    std::vector<int> neg = raw;
    for (int& c : neg) c = -c;
    std::sort(pos.begin(), pos.end(), std::greater<int>());
    std::sort(neg.begin(), neg.end(), std::greater<int>());
    return std::max(pos, neg);
}

namespace {

// Cyclically adjacent-distinct sequences over [0, r) of length k.
void gen_row_seqs(int r, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        if (cur.front() != cur.back()) out.push_back(cur);
        return;
    }
    for (int v = 0; v < r; ++v) {
        if (!cur.empty() && cur.back() == v) continue;
        cur.push_back(v);
        gen_row_seqs(r, k, cur, out);
        cur.pop_back();
    }
}

// Restricted-growth strings of length k with cyclically adjacent positions on
// distinct variables and at least two variables.
void gen_col_patterns(int k, std::vector<int>& cur, int used,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        if (cur.front() != cur.back() && used >= 2) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= used; ++v) {
        if (!cur.empty() && cur.back() == v) continue;
        cur.push_back(v);
        gen_col_patterns(k, cur, std::max(used, v + 1), out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ClosedPathTemplate> enumerate_templates(int r, int k) {
    if (r < 1 || k < 2) return {};
    std::vector<std::vector<int>> row_seqs;
    std::vector<int> scratch;
    gen_row_seqs(r, k, scratch, row_seqs);
    std::vector<std::vector<int>> col_patterns;
    gen_col_patterns(k, scratch, 0, col_patterns);

    std::vector<ClosedPathTemplate> out;
    out.reserve(row_seqs.size() * col_patterns.size());
    for (const auto& rows : row_seqs) {
        for (const auto& cols : col_patterns) {
            const int m = *std::max_element(cols.begin(), cols.end()) + 1;
            out.push_back(ClosedPathTemplate{rows, cols, m});
        }
    }
    return out;
}

namespace {

// Offsets of the nodes along the expanded walk, as linear forms over the
// column variables (integer coefficient vectors, start offset fixed at 0).
struct WalkForms {
    std::vector<std::vector<int>> var_offset;    // per position
    std::vector<std::vector<int>> check_offset;  // per position
};

WalkForms walk_forms(const ClosedPathTemplate& t, const std::vector<int>& a) {
    const int k = static_cast<int>(t.row_seq.size());
    const int m = t.num_vars;
    WalkForms w;
    w.var_offset.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(m), 0));
    w.check_offset = w.var_offset;
    std::vector<int> x(static_cast<std::size_t>(m), 0);
    for (int pos = 0; pos < k; ++pos) {
        const int row = t.row_seq[static_cast<std::size_t>(pos)];
        const int label = a[static_cast<std::size_t>(row)];
        w.var_offset[static_cast<std::size_t>(pos)] = x;
        std::vector<int> y = x;
        y[static_cast<std::size_t>(t.col_pattern[static_cast<std::size_t>(pos)])] -= label;
        w.check_offset[static_cast<std::size_t>(pos)] = y;
        x = y;
        x[static_cast<std::size_t>(t.col_pattern[static_cast<std::size_t>((pos + 1) % k)])] += label;
    }
    return w;
}

// True iff two same-block node offsets coincide identically, i.e. the walk
// revisits a node for every column assignment.
bool forms_degenerate(const ClosedPathTemplate& t, const WalkForms& w) {
    const int k = static_cast<int>(t.row_seq.size());
    for (int s = 0; s < k; ++s) {
        for (int u = s + 1; u < k; ++u) {
            if (t.col_pattern[static_cast<std::size_t>(s)] == t.col_pattern[static_cast<std::size_t>(u)] &&
                w.var_offset[static_cast<std::size_t>(s)] == w.var_offset[static_cast<std::size_t>(u)]) {
                return true;
            }
            if (t.row_seq[static_cast<std::size_t>(s)] == t.row_seq[static_cast<std::size_t>(u)] &&
                w.check_offset[static_cast<std::size_t>(s)] == w.check_offset[static_cast<std::size_t>(u)]) {
                return true;
            }
        }
    }
    return false;
}

std::vector<int> merged_coefficients(const ClosedPathTemplate& t, const std::vector<int>& a) {
    const int k = static_cast<int>(t.row_seq.size());
    std::vector<int> raw(static_cast<std::size_t>(t.num_vars), 0);
    for (int pos = 0; pos < k; ++pos) {
        const int prev = t.row_seq[static_cast<std::size_t>((pos + k - 1) % k)];
        const int curr = t.row_seq[static_cast<std::size_t>(pos)];
        raw[static_cast<std::size_t>(t.col_pattern[static_cast<std::size_t>(pos)])] +=
            a[static_cast<std::size_t>(curr)] - a[static_cast<std::size_t>(prev)];
    }
    return raw;
}

void check_template(const ClosedPathTemplate& t) {
    const int k = static_cast<int>(t.row_seq.size());
    if (k < 2 || t.col_pattern.size() != t.row_seq.size()) {
        throw std::invalid_argument("malformed closed-path template");
    }
    for (int pos = 0; pos < k; ++pos) {
        const int next = (pos + 1) % k;
        if (t.row_seq[static_cast<std::size_t>(pos)] == t.row_seq[static_cast<std::size_t>(next)] ||
            t.col_pattern[static_cast<std::size_t>(pos)] == t.col_pattern[static_cast<std::size_t>(next)]) {
            throw std::invalid_argument("closed-path adjacency constraint violated");
        }
    }
}

}  // namespace

DeriveResult derive_equation(const ClosedPathTemplate& t, const std::vector<int>& row_labels) {
    check_template(t);
    for (int row : t.row_seq) {
        if (row < 0 || row >= static_cast<int>(row_labels.size())) {
            throw std::invalid_argument("row index out of range for the given labels");
        }
    }
    DeriveResult res;
    res.raw_coeffs = merged_coefficients(t, row_labels);
    if (forms_degenerate(t, walk_forms(t, row_labels))) {
        res.kind = DeriveKind::Degenerate;
        return res;
    }
    const bool all_zero = std::all_of(res.raw_coeffs.begin(), res.raw_coeffs.end(),
                                      [](int c) { return c == 0; });
    if (all_zero) {
        res.kind = DeriveKind::Unavoidable;
        return res;
    }
    res.kind = DeriveKind::Equation;
    res.equation.coeffs = canonicalize_coefficients(res.raw_coeffs);
    res.equation.cycle_len = 2 * static_cast<int>(t.row_seq.size());
    return res;
}

std::map<int, std::vector<CycleEquation>> governing_equations(const std::vector<int>& row_labels,
                                                              int max_cycle_len) {
    if (max_cycle_len < 6 || max_cycle_len > 10 || max_cycle_len % 2 != 0) {
        throw std::invalid_argument("max_cycle_len must be 6, 8 or 10");
    }
    const int r = static_cast<int>(row_labels.size());
    std::map<int, std::vector<CycleEquation>> result;
    for (int k = 3; 2 * k <= max_cycle_len; ++k) {
        std::set<std::vector<int>> seen;
        for (const auto& t : enumerate_templates(r, k)) {
            DeriveResult d = derive_equation(t, row_labels);
            if (d.kind != DeriveKind::Equation) continue;
            if (d.equation.coeffs.size() < 2) continue;
            if (d.equation.coeffs == std::vector<int>{1, -1}) continue;  // no proper solutions
            seen.insert(d.equation.coeffs);
        }
        auto& eqs = result[2 * k];
        for (const auto& c : seen) eqs.push_back(CycleEquation{c, 2 * k});
        std::sort(eqs.begin(), eqs.end());
    }
    return result;
}

bool has_unavoidable_cycles(const std::vector<int>& row_labels, int cycle_len) {
    if (cycle_len != 8 && cycle_len != 10) {
        throw std::invalid_argument("cycle_len must be 8 or 10");
    }
    const int r = static_cast<int>(row_labels.size());
    for (const auto& t : enumerate_templates(r, cycle_len / 2)) {
        if (derive_equation(t, row_labels).kind == DeriveKind::Unavoidable) return true;
    }
    return false;
}

namespace {

void solutions_rec(const std::vector<int>& coeffs, int q, const std::vector<int>& labels,
                   std::vector<int>& tuple, std::vector<std::uint8_t>& used, long long partial,
                   std::vector<std::vector<int>>& out) {
    const std::size_t pos = tuple.size();
    if (pos == coeffs.size()) {
        if (((partial % q) + q) % q == 0) out.push_back(tuple);
        return;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        tuple.push_back(labels[i]);
        solutions_rec(coeffs, q, labels, tuple, used, partial + static_cast<long long>(coeffs[pos]) * labels[i], out);
        tuple.pop_back();
        used[i] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> find_proper_solutions(const std::vector<int>& coeffs, Modulus q,
                                                    const std::vector<int>& labels) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> out;
    if (sorted.size() < coeffs.size()) return out;
    std::vector<int> tuple;
    std::vector<std::uint8_t> used(sorted.size(), 0);
    solutions_rec(coeffs, static_cast<int>(q.value()), sorted, tuple, used, 0, out);
    return out;
}

std::vector<std::vector<int>> find_proper_solutions(const CycleEquation& eq, Modulus q,
                                                    const std::vector<int>& labels) {
    return find_proper_solutions(eq.coeffs, q, labels);
}

std::size_t count_solution_orbits(const std::vector<int>& coeffs, Modulus q,
                                  const std::vector<int>& labels) {
    const std::size_t m = coeffs.size();
    // Position permutations mapping the coefficient vector onto itself or its
    // negation; applying one to a solution yields another solution.
    std::vector<std::vector<std::size_t>> symmetries;
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    do {
        bool same = true;
        bool negated = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (coeffs[perm[i]] != coeffs[i]) same = false;
            if (coeffs[perm[i]] != -coeffs[i]) negated = false;
        }
        if (same || negated) symmetries.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<int>> reps;
    for (const auto& sol : find_proper_solutions(coeffs, q, labels)) {
        std::vector<int> best = sol;
        std::vector<int> image(m);
        for (const auto& p : symmetries) {
            for (std::size_t i = 0; i < m; ++i) image[i] = sol[p[i]];
            if (image < best) best = image;
        }
        reps.insert(best);
    }
    return reps.size();
}

namespace {

// Walk expansion for a concrete assignment; true iff all 2k nodes are distinct.
bool walk_is_simple(const ClosedPathTemplate& t, const std::vector<int>& a_mod,
                    const std::vector<int>& u, int q) {
    const int k = static_cast<int>(t.row_seq.size());
    std::vector<std::pair<int, int>> var_nodes;   // (variable id, offset)
    std::vector<std::pair<int, int>> check_nodes; // (row index, offset)
    int x = 0;
    for (int pos = 0; pos < k; ++pos) {
        const int row = t.row_seq[static_cast<std::size_t>(pos)];
        const long long shift = static_cast<long long>(a_mod[static_cast<std::size_t>(row)]);
        const int var = t.col_pattern[static_cast<std::size_t>(pos)];
        var_nodes.emplace_back(var, x);
        const int y = static_cast<int>(((x - shift * u[static_cast<std::size_t>(var)]) % q + q) % q);
        check_nodes.emplace_back(row, y);
        const int next_var = t.col_pattern[static_cast<std::size_t>((pos + 1) % k)];
        x = static_cast<int>((y + shift * u[static_cast<std::size_t>(next_var)]) % q);
    }
    std::sort(var_nodes.begin(), var_nodes.end());
    if (std::adjacent_find(var_nodes.begin(), var_nodes.end()) != var_nodes.end()) return false;
    std::sort(check_nodes.begin(), check_nodes.end());
    return std::adjacent_find(check_nodes.begin(), check_nodes.end()) == check_nodes.end();
}

// Does some assignment of distinct labels to the template's column variables
// satisfy the congruence and expand to a simple cycle?
bool template_realizable(const ClosedPathTemplate& t, const std::vector<int>& a_mod,
                         const std::vector<int>& coeffs_mod, const std::vector<int>& labels,
                         int q, std::vector<int>& u, std::vector<std::uint8_t>& used,
                         long long partial) {
    const std::size_t pos = u.size();
    if (pos == coeffs_mod.size()) {
        if (partial % q != 0) return false;
        return walk_is_simple(t, a_mod, u, q);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        u.push_back(labels[i]);
        const bool hit = template_realizable(
            t, a_mod, coeffs_mod, labels, q, u, used,
            partial + static_cast<long long>(coeffs_mod[pos]) * labels[i]);
        u.pop_back();
        used[i] = 0;
        if (hit) return true;
    }
    return false;
}

}  // namespace

int predict_girth(const ArrayCodeSpec& spec) {
    if (spec.mask) throw std::invalid_argument("girth prediction is undefined for masked specs");
    if (spec.r() < 3 || spec.s() < 3) throw std::invalid_argument("predict_girth requires r >= 3 and s >= 3");
    const int q = static_cast<int>(spec.q.value());
    std::vector<int> a_mod;
    for (int a : spec.row_labels) a_mod.push_back(((a % q) + q) % q);

    for (int k = 3; k <= 5; ++k) {
        for (const auto& t : enumerate_templates(spec.r(), k)) {
            std::vector<int> coeffs_mod;
            for (int c : merged_coefficients(t, a_mod)) coeffs_mod.push_back(((c % q) + q) % q);
            if (static_cast<int>(coeffs_mod.size()) > spec.s()) continue;
            std::vector<int> u;
            std::vector<std::uint8_t> used(spec.col_labels.size(), 0);
            if (template_realizable(t, a_mod, coeffs_mod, spec.col_labels, q, u, used, 0)) {
                return 2 * k;
            }
        }
    }
    return 12;
}

std::string format_equation(const CycleEquation& eq) {
    static const char* names = "ijklm";
    std::string out;
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
        const int c = eq.coeffs[i];
        if (i == 0) {
            out += std::to_string(c);
        } else {
            out += c < 0 ? " -" : " +";
            out += std::to_string(c < 0 ? -c : c);
        }
        out += names[i];
    }
    out += " = 0 (len=" + std::to_string(eq.cycle_len) + ")";
    return out;
}

std::vector<int> parse_equation_text(const std::string& text) {
    std::string lhs = text;
    if (auto eq_pos = lhs.find('='); eq_pos != std::string::npos) {
        std::string rhs = lhs.substr(eq_pos + 1);
        lhs = lhs.substr(0, eq_pos);
        rhs.erase(std::remove_if(rhs.begin(), rhs.end(), ::isspace), rhs.end());
        if (rhs != "0") throw std::invalid_argument("equation right-hand side must be 0: " + text);
    }
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
    std::vector<int> coeffs(5, 0);
    int max_var = -1;
    std::size_t i = 0;
    while (i < lhs.size()) {
        int sign = 1;
        if (lhs[i] == '+') { ++i; }
        else if (lhs[i] == '-') { sign = -1; ++i; }
        int mag = 0;
        bool have_digits = false;
        while (i < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[i]))) {
            mag = mag * 10 + (lhs[i] - '0');
            have_digits = true;
            ++i;
        }
        if (!have_digits) mag = 1;
        if (i >= lhs.size() || lhs[i] < 'i' || lhs[i] > 'm') {
            throw std::invalid_argument("cannot parse equation term: " + text);
        }
        const int var = lhs[i] - 'i';
        ++i;
        coeffs[static_cast<std::size_t>(var)] += sign * mag;
        max_var = std::max(max_var, var);
    }
    if (max_var < 1) throw std::invalid_argument("equation needs at least two variables: " + text);
    coeffs.resize(static_cast<std::size_t>(max_var) + 1);
    return coeffs;
}

}  // namespace arraycode
