#include "fersml/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fersml::stats {

TooFewValuesError::TooFewValuesError(std::size_t n, std::size_t need)
    : Error("sample has " + std::to_string(n) + " values; need at least " +
            std::to_string(need)) {}

double normal_cdf(double z) noexcept {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

SampleStats describe(std::span<const double> sample) {
    if (sample.size() < 2) throw TooFewValuesError(sample.size(), 2);
    const double n = static_cast<double>(sample.size());
    double sum = 0.0;
    for (const double v : sample) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (const double v : sample) {
        const double d = v - mean;
        ss += d * d;
    }
    return SampleStats{sample.size(), mean, std::sqrt(ss / (n - 1.0))};
}

TestResult mann_whitney(std::span<const double> x, std::span<const double> y,
                        double alpha) {
    if (x.empty() || y.empty()) throw EmptySampleError();
    const double m = static_cast<double>(x.size());
    const double n = static_cast<double>(y.size());
    const double big_n = m + n;

    double u = 0.0;
    for (const double xi : x) {
        for (const double yj : y) {
            if (xi < yj) {
                u += 1.0;
            } else if (xi == yj) {
                u += 0.5;
            }
        }
    }

    // Midrank tie correction: collect pooled tie-group sizes.
    std::vector<double> pooled;
    pooled.reserve(x.size() + y.size());
    pooled.insert(pooled.end(), x.begin(), x.end());
    pooled.insert(pooled.end(), y.begin(), y.end());
    std::sort(pooled.begin(), pooled.end());
    double tie_correction = 0.0;
    bool ties_present = false;
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i + 1;
        while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
        const double t = static_cast<double>(j - i);
        if (t > 1.0) {
            ties_present = true;
            tie_correction += t * t * t - t;
        }
        i = j;
    }

    const double mu = m * n / 2.0;
    const double sigma2 =
        (m * n / 12.0) * ((big_n + 1.0) - tie_correction / (big_n * (big_n - 1.0)));

    TestResult result;
    result.statistic = u;
    result.ties_present = ties_present;
    if (sigma2 <= 0.0) {
        result.z = 0.0;
        result.p = 1.0;
    } else {
        result.z = (u - mu) / std::sqrt(sigma2);
        result.p = 2.0 * normal_cdf(-std::abs(result.z));
    }
    result.reject = result.p < alpha;
    return result;
}

TestResult runs_test(std::span<const double> x, std::span<const double> y,
                     double alpha) {
    if (x.empty() || y.empty()) throw EmptySampleError();
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (m + n < 4) throw TooFewValuesError(m + n, 4);

    struct Item {
        double value;
        int label;  // 0 = x, 1 = y; x sorts first on cross-sample ties
    };
    std::vector<Item> pooled;
    pooled.reserve(m + n);
    for (const double v : x) pooled.push_back({v, 0});
    for (const double v : y) pooled.push_back({v, 1});
    std::stable_sort(pooled.begin(), pooled.end(), [](const Item& a, const Item& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.label < b.label;
    });

    bool ties_present = false;
    for (std::size_t i = 1; i < pooled.size(); ++i) {
        if (pooled[i].value == pooled[i - 1].value &&
            pooled[i].label != pooled[i - 1].label) {
            ties_present = true;
            break;
        }
    }

    int runs = 1;
    for (std::size_t i = 1; i < pooled.size(); ++i) {
        if (pooled[i].label != pooled[i - 1].label) ++runs;
    }

    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double total = md + nd;
    const double mu = 2.0 * md * nd / total + 1.0;
    const double sigma2 =
        2.0 * md * nd * (2.0 * md * nd - md - nd) / (total * total * (total - 1.0));

    TestResult result;
    result.statistic = static_cast<double>(runs);
    result.ties_present = ties_present;
    result.z = (static_cast<double>(runs) - mu) / std::sqrt(sigma2);
    result.p = normal_cdf(result.z);  // one-sided lower tail: few runs reject
    result.reject = result.p < alpha;
    return result;
}

CompareResult compare_distributions(std::span<const double> x,
                                    std::span<const double> y, double alpha) {
    CompareResult result;
    result.mann_whitney = mann_whitney(x, y, alpha);
    result.runs = runs_test(x, y, alpha);
    result.overall_identical_not_rejected =
        !result.mann_whitney.reject && !result.runs.reject;
    return result;
}

}  // namespace fersml::stats
