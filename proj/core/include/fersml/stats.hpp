#pragma once

#include <cstddef>
#include <span>

#include "fersml/model.hpp"

namespace fersml::stats {

class EmptySampleError : public Error {
public:
    EmptySampleError() : Error("sample is empty") {}
};

class TooFewValuesError : public Error {
public:
    explicit TooFewValuesError(std::size_t n, std::size_t need);
};

struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double std_corrected = 0.0;  // divisor n-1
};

struct TestResult {
    double statistic = 0.0;  // U for Mann-Whitney, run count R for Wald-Wolfowitz
    double z = 0.0;
    double p = 1.0;
    bool reject = false;     // p < alpha
    bool ties_present = false;
};

struct CompareResult {
    TestResult mann_whitney;
    TestResult runs;
    bool overall_identical_not_rejected = false;  // neither test rejects
};

// Mean and corrected (n-1 divisor) standard deviation. Throws
// TooFewValuesError when n < 2.
SampleStats describe(std::span<const double> sample);

// Mann-Whitney U with U = #{(x_i, y_j) : x_i < y_j} + half-ties. Normal
// approximation with midrank tie-corrected variance, no continuity
// correction; two-sided p. Throws EmptySampleError.
TestResult mann_whitney(std::span<const double> x, std::span<const double> y,
                        double alpha = 0.05);

// Wald-Wolfowitz runs test: pool and sort ascending, count label runs.
// mu = 2mn/(m+n) + 1, sigma^2 = 2mn(2mn-m-n)/((m+n)^2 (m+n-1)),
// one-sided lower-tail p (few runs suggest differing distributions).
// Cross-sample ties are broken deterministically (x first) and flagged via
// ties_present. Throws EmptySampleError; requires m+n >= 4.
TestResult runs_test(std::span<const double> x, std::span<const double> y,
                     double alpha = 0.05);

// Run both tests; the overall flag is true iff neither rejects.
CompareResult compare_distributions(std::span<const double> x,
                                    std::span<const double> y,
                                    double alpha = 0.05);

// Standard normal CDF (via erfc; used for the p-values above).
double normal_cdf(double z) noexcept;

}  // namespace fersml::stats
