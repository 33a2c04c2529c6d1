#include "arraycode/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace arraycode {

long long tanner_dmin_lower(int r, int g) {
    if (r <= 2) throw std::invalid_argument("tree bound needs column-weight r >= 3");
    if (g != 6 && g != 8 && g != 10 && g != 12) {
        throw std::invalid_argument("girth must be in {6,8,10,12}");
    }
    // Exact rational evaluation, then round up to the nearest even integer
    // (array codes have even-weight codewords only).
    long long num;
    long long den;
    if ((g / 2) % 2 == 1) {
        long long p = 1;  // (r-1)^((g-2)/4)
        for (int i = 0; i < (g - 2) / 4; ++i) p *= r - 1;
        // 2(p-1)/(r-2) + 2p/r
        num = 2 * (p - 1) * r + 2 * p * (r - 2);
        den = static_cast<long long>(r - 2) * r;
    } else {
        long long p = 1;  // (r-1)^(g/4)
        for (int i = 0; i < g / 4; ++i) p *= r - 1;
        num = 2 * (p - 1);
        den = r - 2;
    }
    long long d = (num + den - 1) / den;  // ceil
    if (d % 2 != 0) ++d;
    return d;
}

long long mackay_davey_upper(int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    long long f = 1;
    for (int i = 2; i <= r + 1; ++i) f *= i;
    return f;
}

double sidon_upper(long long n_odd) {
    if (n_odd < 3 || n_odd % 2 == 0) throw std::invalid_argument("N must be odd and >= 3");
    return std::sqrt(static_cast<double>(n_odd) - 0.75) + 0.5;
}

double moore_upper(long long q, int r, int g) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (g == 8) {
        return 1.0 + static_cast<double>(q - 1) / (r - 1);
    }
    if (g == 10) {
        const double a = static_cast<double>(q) + static_cast<double>(r) * (2 * r - 3);
        const double disc = a * a - 4.0 * r * std::pow(static_cast<double>(r - 1), 3);
        return (a + std::sqrt(disc)) / (2.0 * r * (r - 1));
    }
    throw std::invalid_argument("girth must be 8 or 10");
}

double hypergraph_lower(long long q, int l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    return std::cbrt(3.0 * static_cast<double>(q) * static_cast<double>(q) /
                     (static_cast<double>(l) * static_cast<double>(q - 1)));
}

double behrend_lower(long long q, int d_max) {
    if (d_max < 2) throw std::invalid_argument("D must be >= 2");
    if (q <= static_cast<long long>(d_max) * d_max) {
        throw std::invalid_argument("requires q > D^2");
    }
    const double log_d = std::log(static_cast<double>(d_max));
    const double log_q = std::log(static_cast<double>(q));
    const double gamma1 = static_cast<double>(d_max) * d_max * std::sqrt(0.5 * log_d);
    const double gamma2 = 2.0 * std::sqrt(2.0 * log_d);
    return gamma1 * static_cast<double>(q) *
           std::exp(-gamma2 * std::sqrt(log_q) - 0.5 * std::log(log_q));
}

BoundReport bound_report(long long q, int r, int g, std::optional<int> l,
                         std::optional<int> d_max) {
    BoundReport rep;
    rep.q = q;
    rep.r = r;
    rep.g = g;
    rep.dmin_lower = tanner_dmin_lower(r, g);
    rep.dmin_upper = mackay_davey_upper(r);
    if (g == 8 || g == 10) rep.moore_cap = moore_upper(q, r, g);
    if (g == 10) rep.sidon_cap = sidon_upper(q);
    if (l) rep.hyper_lower = hypergraph_lower(q, *l);
    if (d_max && q > static_cast<long long>(*d_max) * (*d_max)) {
        rep.behrend_bound = behrend_lower(q, *d_max);
    }
    return rep;
}

}  // namespace arraycode
