#pragma once

#include <array>
#include <span>
#include <utility>

namespace fersml::stats {

// Embedded reference data: total goals of the final-eight phase
// (quarter-finals, semi-finals, third place, final).

// Ten selected real World Cups, keyed by year.
struct RealWorldCupGoals {
    int year;
    int goals;
};

// The real reference row.
std::span<const RealWorldCupGoals> real_wc_goals() noexcept;

// The same ten values as doubles, in year order, ready for the tests.
std::span<const double> real_wc_goal_values() noexcept;

// Eight simulated reference rows of ten totals each (row index 0..7).
std::span<const std::array<double, 10>> simulated_wc_rows() noexcept;

}  // namespace fersml::stats
