#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fersml/engine.hpp"

namespace fersml::field {

class OutOfBoundsError : public Error {
public:
    OutOfBoundsError(int x, int y);
};

class BadNormalizerError : public Error {
public:
    BadNormalizerError(double n, double big_n);
};

using sim::BallTraceRecord;
using sim::Team;

// A (width x height) grid of 2-vectors.
struct VectorGrid {
    int width = 0;
    int height = 0;
    std::vector<std::array<double, 2>> cells;  // row-major: index = y*width + x

    const std::array<double, 2>& at(int x, int y) const { return cells[index(x, y)]; }
    std::array<double, 2>& at(int x, int y) { return cells[index(x, y)]; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x);
    }
};

// The socceral-force accumulator: one cell per coordinate unit (1025 x 641),
// two components, two teams, all zero-initialized. Each update averages the
// stored vector with the ball's current displacement:
//   field[lx][ly][c][team] <- (field[lx][ly][c][team] + (target_c - pos_c)) / 2
class ForceField {
public:
    static constexpr int kWidth = 1025;   // x in [0,1024]
    static constexpr int kHeight = 641;   // y in [0,640]

    ForceField();

    // Apply the averaging rule at (lx,ly) for `team` with target (lcx,lcy).
    // Touches exactly one cell. Throws OutOfBoundsError.
    void update_cell(int lx, int ly, int lcx, int lcy, Team team);

    // update_cell once per trace record, in tick order, using each record's
    // possession as the team.
    void accumulate(std::span<const BallTraceRecord> trace);

    // Stored component c (0 = x, 1 = y) for one team at one cell.
    double at(int x, int y, int c, Team team) const;

    // Copy one team's layer out as a VectorGrid.
    VectorGrid grid(Team team) const;

private:
    std::size_t index(int x, int y, int c, Team team) const noexcept;

    std::vector<double> data_;
};

// Componentwise home + away.
VectorGrid sum_fields(const ForceField& field);

// Magnitude color ramp: (floor(255*n/N), 255, 0). Throws BadNormalizerError
// when N <= 0 or n > N.
std::array<std::uint8_t, 3> magnitude_color(double n, double big_n);

enum class RenderMode { heatmap_ppm, vectors_csv };

// heatmap_ppm: binary PPM (P6), one pixel per cell, row y=0 first, colored
// by magnitude_color with N = the grid's maximum vector magnitude (N = 1
// when the grid is all zero). vectors_csv: header x,y,vx,vy, one row per
// cell with a nonzero vector, in (y,x) scan order.
void render(const VectorGrid& grid, RenderMode mode, std::ostream& out);

// Render one team's layer of a force field.
void render(const ForceField& field, Team team, RenderMode mode, std::ostream& out);

}  // namespace fersml::field
