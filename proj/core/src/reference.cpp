#include "fersml/reference.hpp"

namespace fersml::stats {

namespace {

// Total goals of the final-eight phase of ten selected real World Cups.
constexpr RealWorldCupGoals kRealGoals[10] = {
    {1934, 27}, {1954, 48}, {1958, 35}, {1966, 31}, {1970, 34},
    {1990, 30}, {1994, 33}, {1998, 27}, {2002, 22}, {2006, 29},
};

constexpr double kRealValues[10] = {27, 48, 35, 31, 34, 30, 33, 27, 22, 29};

// Eight simulated reference rows (one parameter setting per row, ten world
// cups per row).
constexpr std::array<double, 10> kSimulatedRows[8] = {
    {35, 27, 31, 34, 30, 22, 29, 31, 31, 31},
    {30, 26, 28, 39, 29, 44, 34, 29, 37, 40},
    {33, 30, 24, 27, 15, 26, 30, 29, 28, 31},
    {26, 33, 38, 23, 21, 27, 31, 24, 36, 35},
    {35, 27, 34, 33, 31, 24, 40, 32, 27, 32},
    {30, 37, 26, 29, 33, 33, 29, 23, 32, 24},
    {31, 23, 22, 32, 31, 27, 26, 18, 29, 38},
    {26, 36, 35, 22, 32, 14, 28, 33, 28, 30},
};

}  // namespace

std::span<const RealWorldCupGoals> real_wc_goals() noexcept { return kRealGoals; }

std::span<const double> real_wc_goal_values() noexcept { return kRealValues; }

std::span<const std::array<double, 10>> simulated_wc_rows() noexcept {
    return kSimulatedRows;
}

}  // namespace fersml::stats
