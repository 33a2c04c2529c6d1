#include "arraycode/sequence_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace arraycode {

bool is_avoidance_clean(const std::vector<int>& values, Modulus q,
                        const std::vector<CycleEquation>& equations) {
    for (const auto& eq : equations) {
        if (!find_proper_solutions(eq.coeffs, q, values).empty()) return false;
    }
    return true;
}

namespace {

// Tuples over values ∪ {candidate} that use the candidate at least once.
bool candidate_completes_solution(const std::vector<int>& coeffs, int q,
                                  const std::vector<int>& values, int candidate,
                                  std::vector<std::uint8_t>& used, bool candidate_used,
                                  std::size_t pos, long long partial) {
    if (pos == coeffs.size()) {
        return candidate_used && ((partial % q) + q) % q == 0;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        const bool hit = candidate_completes_solution(
            coeffs, q, values, candidate, used, candidate_used, pos + 1,
            partial + static_cast<long long>(coeffs[pos]) * values[i]);
        used[i] = 0;
        if (hit) return true;
    }
    if (!candidate_used) {
        if (candidate_completes_solution(coeffs, q, values, candidate, used, true, pos + 1,
                                         partial + static_cast<long long>(coeffs[pos]) * candidate)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool candidate_admissible(const std::vector<int>& values, int candidate, Modulus q,
                          const std::vector<CycleEquation>& equations) {
    std::vector<std::uint8_t> used(values.size(), 0);
    for (const auto& eq : equations) {
        if (eq.coeffs.size() > values.size() + 1) continue;
        if (candidate_completes_solution(eq.coeffs, static_cast<int>(q.value()), values,
                                         candidate, used, false, 0, 0)) {
            return false;
        }
    }
    return true;
}

GreedyResult greedy_extend(Modulus q, const std::vector<CycleEquation>& equations,
                           const std::vector<int>& seed, std::size_t target_len) {
    const int qi = static_cast<int>(q.value());
    if (target_len > q.value()) throw std::invalid_argument("target length exceeds q");
    for (std::size_t i = 0; i < seed.size(); ++i) {
        if (seed[i] < 0 || seed[i] >= qi) throw std::invalid_argument("seed value out of [0,q-1]");
        if (i > 0 && seed[i] <= seed[i - 1]) {
            throw std::invalid_argument("seed must be strictly increasing");
        }
    }
    if (!is_avoidance_clean(seed, q, equations)) {
        throw std::invalid_argument("seed sequence is not avoidance-clean");
    }

    GreedyResult res;
    res.sequence.q = q.value();
    res.sequence.values = seed;
    res.sequence.certificate = equations;
    auto& vals = res.sequence.values;
    while (vals.size() < target_len) {
        int next = -1;
        for (int cand = vals.empty() ? 0 : vals.back() + 1; cand < qi; ++cand) {
            if (candidate_admissible(vals, cand, q, equations)) {
                next = cand;
                break;
            }
        }
        if (next < 0) {
            res.reached_target = false;
            return res;
        }
        vals.push_back(next);
    }
    res.reached_target = true;
    return res;
}

std::vector<int> bosznay_base(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("bosznay base requires q >= 2");
    long long t = 1;
    while (t * t * t * t < static_cast<long long>(q)) ++t;
    std::vector<int> out;
    for (long long j = 1; j < t; ++j) {
        const long long n_j = j * t * t * t + j * (j + 1) / 2;
        if (n_j < static_cast<long long>(q)) out.push_back(static_cast<int>(n_j));
    }
    return out;
}

Form9Row::Form9Row(std::vector<int> c, int b) : u_coeffs(std::move(c)), v_coeff(b) {
    if (b <= 0) throw std::invalid_argument("form-9 row needs b > 0");
    int sum = 0;
    int nonzero = 0;
    for (int ci : u_coeffs) {
        if (ci < 0) throw std::invalid_argument("form-9 coefficients must be non-negative");
        sum += ci;
        if (ci != 0) ++nonzero;
    }
    if (sum != b) throw std::invalid_argument("form-9 row needs sum(c_j) = b");
    if (nonzero < 2) throw std::invalid_argument("form-9 row needs at least two nonzero c_j");
}

std::vector<int> Form9Row::homogeneous() const {
    std::vector<int> h;
    for (int c : u_coeffs) {
        if (c != 0) h.push_back(c);
    }
    h.push_back(-v_coeff);
    return h;
}

bool matches_form9(const std::vector<int>& coeffs) {
    int pos = 0;
    int neg = 0;
    for (int c : coeffs) {
        if (c > 0) ++pos;
        else if (c < 0) ++neg;
    }
    return (neg == 1 && pos >= 2) || (pos == 1 && neg >= 2);
}

LabelSequence bosznay_pipeline(Modulus q, const std::vector<CycleEquation>& equations) {
    std::vector<CycleEquation> other;
    for (const auto& eq : equations) {
        if (!matches_form9(eq.coeffs)) other.push_back(eq);
    }

    // Base is guaranteed clean for the form-compatible equations; expurgate
    // ascending against the rest, keeping an element unless it completes a
    // proper solution with the already-kept ones.
    std::vector<int> kept;
    for (int v : bosznay_base(q.value())) {
        if (candidate_admissible(kept, v, q, other)) kept.push_back(v);
    }

    for (int v = 0; v < static_cast<int>(q.value()); ++v) {
        if (std::binary_search(kept.begin(), kept.end(), v)) continue;
        if (candidate_admissible(kept, v, q, equations)) {
            kept.insert(std::upper_bound(kept.begin(), kept.end(), v), v);
        }
    }

    LabelSequence seq;
    seq.q = q.value();
    seq.values = kept;
    seq.certificate = equations;
    return seq;
}

namespace {

// Largest k with base^k <= q.
int digit_count(std::uint64_t q, std::uint64_t base) {
    int k = 0;
    std::uint64_t pow = 1;
    while (pow <= q / base) {
        pow *= base;
        ++k;
    }
    return k;
}

}  // namespace

LabelSequence behrend_construct(Modulus q, const EquationSystemForm9& system, int n) {
    if (system.rows.empty()) throw std::invalid_argument("empty equation system");
    if (n <= 0) throw std::invalid_argument("n must be positive");
    int d_max = 0;
    for (const auto& row : system.rows) d_max = std::max(d_max, row.v_coeff);
    const std::uint64_t base = static_cast<std::uint64_t>(n) * d_max + 1;
    if (static_cast<std::uint64_t>(n) * d_max >= q.value()) {
        throw std::invalid_argument("requires n*D < q");
    }
    const int k = digit_count(q.value(), base);
    if (k < 1) throw std::invalid_argument("digit count collapsed to zero");

    // Enumerate digit vectors in [0,n]^k (not all zero), bucket by squared norm.
    std::map<long long, std::vector<long long>> buckets;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    while (true) {
        long long value = 0;
        long long rho = 0;
        for (int i = k - 1; i >= 0; --i) {
            value = value * static_cast<long long>(base) + digits[static_cast<std::size_t>(i)];
            rho += static_cast<long long>(digits[static_cast<std::size_t>(i)]) *
                   digits[static_cast<std::size_t>(i)];
        }
        if (rho > 0) buckets[rho].push_back(value);
        int pos = 0;
        while (pos < k && digits[static_cast<std::size_t>(pos)] == n) {
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) break;
        digits[static_cast<std::size_t>(pos)]++;
    }

    const std::vector<long long>* best = nullptr;
    for (const auto& [rho, members] : buckets) {
        if (!best || members.size() > best->size()) best = &members;
    }

    LabelSequence seq;
    seq.q = q.value();
    for (long long v : *best) seq.values.push_back(static_cast<int>(v - 1));
    std::sort(seq.values.begin(), seq.values.end());
    for (const auto& row : system.rows) {
        seq.certificate.push_back(CycleEquation{row.homogeneous(), 0});
    }
    return seq;
}

long long lemma9_size_bound(std::uint64_t q, int d_max, int n) {
    if (n <= 0 || d_max <= 0) throw std::invalid_argument("need n > 0 and D > 0");
    if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d_max) >= q) {
        throw std::invalid_argument("requires n*D < q");
    }
    const int k = digit_count(q, static_cast<std::uint64_t>(n) * d_max + 1);
    if (k < 3) return 0;
    long long pow = 1;
    for (int i = 0; i < k - 2; ++i) pow *= n + 1;
    return (pow - 1 + k - 1) / k;
}

}  // namespace arraycode
