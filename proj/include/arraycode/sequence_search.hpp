#pragma once

#include <vector>

#include "arraycode/cycle_equations.hpp"
#include "arraycode/modulus.hpp"

namespace arraycode {

/// Strictly increasing labels in [0,q-1] together with the equation set they
/// were last verified to avoid.
struct LabelSequence {
    std::uint32_t q = 0;
    std::vector<int> values;
    std::vector<CycleEquation> certificate;
};

/// Brute-force check: no equation in `equations` has a proper solution over
/// Z_q within `values`.
bool is_avoidance_clean(const std::vector<int>& values, Modulus q,
                        const std::vector<CycleEquation>& equations);

/// Would adding `candidate` to the clean set `values` create a proper solution?
/// Only tuples involving the candidate are tested.
bool candidate_admissible(const std::vector<int>& values, int candidate, Modulus q,
                          const std::vector<CycleEquation>& equations);

struct GreedyResult {
    LabelSequence sequence;
    bool reached_target = false;  // false means the range [last+1, q-1] was exhausted
};

/// Extends the seed by repeatedly appending the least admissible integer
/// greater than the last element.
GreedyResult greedy_extend(Modulus q, const std::vector<CycleEquation>& equations,
                           const std::vector<int>& seed, std::size_t target_len);

/// Bosznay base sequence: smallest t with q <= t^4, terms j*t^3 + j(j+1)/2
/// for j = 1..t-1, intersected with [0,q-1].
std::vector<int> bosznay_base(std::uint32_t q);

/// One row of the constrained system sum_j c_j * u_j = b * v with positive b,
/// sum(c_j) = b and at least two nonzero c_j.
struct Form9Row {
    std::vector<int> u_coeffs;
    int v_coeff = 0;

    Form9Row(std::vector<int> c, int b);

    /// Homogeneous coefficient vector (c_1..c_m, -b).
    std::vector<int> homogeneous() const;
};

struct EquationSystemForm9 {
    std::vector<Form9Row> rows;
};

/// Classifies a homogeneous equation as form-compatible (one coefficient of
/// one sign, at least two of the other) if possible.
bool matches_form9(const std::vector<int>& coeffs);

/// Bosznay base, greedy expurgation against the non-form-compatible equations,
/// then greedy extension over all of [0,q-1] against the full set.
LabelSequence bosznay_pipeline(Modulus q, const std::vector<CycleEquation>& equations);

/// Behrend-style digit construction: all x in [1,(nD+1)^k - 1] with base-(nD+1)
/// digits in [0,n], bucketed by the squared l2-norm of the digit vector;
/// returns (largest bucket) - 1, solution-free for the whole system.
LabelSequence behrend_construct(Modulus q, const EquationSystemForm9& system, int n);

/// k = floor(log q / log(nD+1)); ceil(((n+1)^(k-2) - 1)/k), clipped at 0.
long long lemma9_size_bound(std::uint64_t q, int d_max, int n);

}  // namespace arraycode
