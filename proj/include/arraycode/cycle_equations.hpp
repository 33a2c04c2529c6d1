#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arraycode/code_model.hpp"

namespace arraycode {

/// Homogeneous cycle-governing equation sum(c_i * u_i) = 0 over Z_q, in
/// canonical form: coefficients sorted descending, sign fixed so the vector is
/// lexicographically maximal, gcd reduced.
struct CycleEquation {
    std::vector<int> coeffs;
    int cycle_len = 0;

    friend bool operator==(const CycleEquation& a, const CycleEquation& b) {
        return a.coeffs == b.coeffs && a.cycle_len == b.cycle_len;
    }
    friend bool operator<(const CycleEquation& a, const CycleEquation& b);
};

/// Canonical form of a raw coefficient vector: zeros dropped, gcd reduced,
/// sorted descending, lexicographically maximal sign. Empty result means the
/// vector had fewer than two nonzero entries.
std::vector<int> canonicalize_coefficients(std::vector<int> raw);

/// Closed path of length 2k at block level: row_seq lists the k block-row
/// indices; col_pattern maps each of the k column positions onto one of m
/// column variables (first-occurrence numbering), with cyclically adjacent
/// positions on distinct rows and distinct variables.
struct ClosedPathTemplate {
    std::vector<int> row_seq;
    std::vector<int> col_pattern;
    int num_vars = 0;
};

/// All closed-path templates of length 2k over r block-rows.
std::vector<ClosedPathTemplate> enumerate_templates(int r, int k);

enum class DeriveKind { Equation, Unavoidable, Degenerate };

struct DeriveResult {
    DeriveKind kind = DeriveKind::Degenerate;
    /// Merged per-variable coefficients over Z (present for every kind).
    std::vector<int> raw_coeffs;
    /// Canonical equation; meaningful only for kind == Equation.
    CycleEquation equation;
};

/// Coefficient derivation for one template against concrete row labels.
/// Unavoidable: every merged coefficient is zero yet the closed path expands
/// to a genuine cycle for generic column labels. Degenerate: the expanded walk
/// revisits a node for every column assignment, so no cycle arises.
DeriveResult derive_equation(const ClosedPathTemplate& t, const std::vector<int>& row_labels);

/// Canonical governing-equation sets per cycle length (6, 8, up to max_cycle_len),
/// deduplicated within each length, sorted for stable diffing.
std::map<int, std::vector<CycleEquation>> governing_equations(const std::vector<int>& row_labels,
                                                              int max_cycle_len);

/// True iff some length-cycle_len template expands to a cycle for every choice
/// of distinct column labels.
bool has_unavoidable_cycles(const std::vector<int>& row_labels, int cycle_len);

/// All ordered tuples of pairwise-distinct values from `labels` satisfying
/// sum(coeffs_i * u_i) = 0 mod q, in lexicographic order.
std::vector<std::vector<int>> find_proper_solutions(const std::vector<int>& coeffs, Modulus q,
                                                    const std::vector<int>& labels);

std::vector<std::vector<int>> find_proper_solutions(const CycleEquation& eq, Modulus q,
                                                    const std::vector<int>& labels);

/// Number of proper solutions counted up to the symmetries of the equation:
/// position permutations preserving the coefficient vector or negating it
/// (a negated assignment describes the same cycle traversed backwards).
std::size_t count_solution_orbits(const std::vector<int>& coeffs, Modulus q,
                                  const std::vector<int>& labels);

/// Girth predicted from the closed-path analysis: smallest length in {6,8,10}
/// at which some template admits a label assignment expanding to a genuine
/// cycle; 12 otherwise (guaranteed twelve-cycles). Requires an unmasked spec
/// with r >= 3 and s >= 3.
int predict_girth(const ArrayCodeSpec& spec);

/// Renders `2i -1j -1k = 0 (len=6)`.
std::string format_equation(const CycleEquation& eq);

/// Parses an equation transcription such as `3i-2j-2k+l=0`; variables i..m.
std::vector<int> parse_equation_text(const std::string& text);

}  // namespace arraycode
