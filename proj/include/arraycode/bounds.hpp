#pragma once

#include <cstdint>
#include <optional>

namespace arraycode {

/// Tree-bound lower bound on minimum distance for a regular code of
/// column-weight r and girth g, rounded up to the nearest even integer.
long long tanner_dmin_lower(int r, int g);

/// (r+1)! upper bound for parity-check matrices containing an r x (r+1) grid
/// of commuting permutation blocks. Applicable when s >= r+1.
long long mackay_davey_upper(int r);

/// sqrt(N - 3/4) + 1/2 cap on Sidon sequence length over Z_N, N odd.
double sidon_upper(long long n_odd);

/// Moore-type cap on the number of retained block-columns at girth 8 or 10.
double moore_upper(long long q, int r, int g);

/// (3q^2 / (l(q-1)))^(1/3) lower bound on avoiding-set size for l
/// c-non-averaging constraints.
double hypergraph_lower(long long q, int l);

/// Behrend-type lower bound main term (the (1+o(1)) factor taken as 1).
double behrend_lower(long long q, int d_max);

/// Collected bound values for reporting.
struct BoundReport {
    long long q = 0;
    int r = 0;
    int g = 0;
    long long dmin_lower = 0;
    long long dmin_upper = 0;
    double moore_cap = 0.0;
    std::optional<double> sidon_cap;       // girth-10 codes only
    std::optional<double> hyper_lower;     // when l given
    std::optional<double> behrend_bound;   // when D given and q > D^2
};

BoundReport bound_report(long long q, int r, int g, std::optional<int> l, std::optional<int> d_max);

}  // namespace arraycode
