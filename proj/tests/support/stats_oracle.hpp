#pragma once

// Independent brute-force oracles for the two-sample tests, plus exact
// permutation distributions for small equal sample sizes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace testsupport {

// U statistic by direct pair counting: #{(i,j) : x_i < y_j} + 0.5 ties.
inline double oracle_u(std::span<const double> x, std::span<const double> y) {
    double u = 0.0;
    for (const double a : x) {
        for (const double b : y) {
            if (a < b) u += 1.0;
            else if (a == b) u += 0.5;
        }
    }
    return u;
}

// Number of label runs in the pooled sample sorted ascending, cross-sample
// ties broken x-first (stable on label 0 = x, 1 = y).
inline int oracle_runs(std::span<const double> x, std::span<const double> y) {
    std::vector<std::pair<double, int>> pooled;
    for (const double a : x) pooled.push_back({a, 0});
    for (const double b : y) pooled.push_back({b, 1});
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const auto& lhs, const auto& rhs) {
                         if (lhs.first != rhs.first) return lhs.first < rhs.first;
                         return lhs.second < rhs.second;
                     });
    int runs = pooled.empty() ? 0 : 1;
    for (std::size_t i = 1; i < pooled.size(); ++i) {
        if (pooled[i].second != pooled[i - 1].second) ++runs;
    }
    return runs;
}

// Exact permutation distributions for equal sample sizes n vs n with all
// values distinct: every C(2n, n) assignment of pooled ranks to sample x is
// equally likely. Returned as (statistic value -> count) maps.
struct ExactDistributions {
    std::map<double, std::int64_t> u_counts;
    std::map<int, std::int64_t> run_counts;
    std::int64_t total = 0;
};

inline ExactDistributions exact_distributions(int n) {
    ExactDistributions out;
    const int pool = 2 * n;
    for (std::uint32_t mask = 0; mask < (1u << pool); ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        // Ranks 1..2n; bit r-1 set means rank r belongs to x.
        double u = 0.0;   // #{x < y}
        int runs = 1;
        int y_seen = 0;
        for (int r = 0; r < pool; ++r) {
            const bool is_x = (mask >> r) & 1u;
            if (is_x) {
                u += static_cast<double>(n - y_seen);  // y ranks above this x
            } else {
                ++y_seen;
            }
            if (r > 0) {
                const bool prev_x = (mask >> (r - 1)) & 1u;
                if (prev_x != is_x) ++runs;
            }
        }
        ++out.u_counts[u];
        ++out.run_counts[runs];
        ++out.total;
    }
    return out;
}

// Two-sided exact mid-p for the U statistic.
inline double exact_u_midp(const ExactDistributions& dist, double u) {
    double below = 0.0, at = 0.0, above = 0.0;
    for (const auto& [value, count] : dist.u_counts) {
        if (value < u) below += static_cast<double>(count);
        else if (value == u) at += static_cast<double>(count);
        else above += static_cast<double>(count);
    }
    const double total = static_cast<double>(dist.total);
    const double lower = (below + 0.5 * at) / total;
    const double upper = (above + 0.5 * at) / total;
    return std::min(1.0, 2.0 * std::min(lower, upper));
}

// Lower-tail exact mid-p for the run count.
inline double exact_runs_midp(const ExactDistributions& dist, int runs) {
    double below = 0.0, at = 0.0;
    for (const auto& [value, count] : dist.run_counts) {
        if (value < runs) below += static_cast<double>(count);
        else if (value == runs) at += static_cast<double>(count);
    }
    return (below + 0.5 * at) / static_cast<double>(dist.total);
}

// Realize a rank assignment as two concrete distinct-valued samples:
// rank r (1-based) becomes the value r, assigned to x when bit r-1 is set.
struct MaskSamples {
    std::vector<double> x, y;
};

inline MaskSamples samples_for_mask(std::uint32_t mask, int n) {
    MaskSamples s;
    for (int r = 0; r < 2 * n; ++r) {
        if ((mask >> r) & 1u) s.x.push_back(static_cast<double>(r + 1));
        else s.y.push_back(static_cast<double>(r + 1));
    }
    return s;
}

}  // namespace testsupport
