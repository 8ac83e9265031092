#include "fersml/forcefield.hpp"

#include <cmath>
#include <ostream>

#include "text_util.hpp"

namespace fersml::field {

namespace {

using fersml::detail::format_double;

std::string bounds_message(int x, int y) {
    return "cell (" + std::to_string(x) + "," + std::to_string(y) +
           ") outside the 1025x641 grid";
}

std::string normalizer_message(double n, double big_n) {
    return "magnitude " + format_double(n) + " with normalizer " + format_double(big_n) +
           " (need 0 <= n <= N and N > 0)";
}

bool in_grid(int x, int y) noexcept {
    return x >= 0 && x < ForceField::kWidth && y >= 0 && y < ForceField::kHeight;
}

}  // namespace

OutOfBoundsError::OutOfBoundsError(int x, int y) : Error(bounds_message(x, y)) {}

BadNormalizerError::BadNormalizerError(double n, double big_n)
    : Error(normalizer_message(n, big_n)) {}

ForceField::ForceField()
    : data_(static_cast<std::size_t>(kWidth) * kHeight * 2 * 2, 0.0) {}

std::size_t ForceField::index(int x, int y, int c, Team team) const noexcept {
    return ((static_cast<std::size_t>(x) * kHeight + static_cast<std::size_t>(y)) * 2 +
            static_cast<std::size_t>(c)) *
               2 +
           static_cast<std::size_t>(team);
}

void ForceField::update_cell(int lx, int ly, int lcx, int lcy, Team team) {
    if (!in_grid(lx, ly)) throw OutOfBoundsError(lx, ly);
    if (!in_grid(lcx, lcy)) throw OutOfBoundsError(lcx, lcy);
    double& vx = data_[index(lx, ly, 0, team)];
    double& vy = data_[index(lx, ly, 1, team)];
    vx = (vx + static_cast<double>(lcx - lx)) / 2.0;
    vy = (vy + static_cast<double>(lcy - ly)) / 2.0;
}

void ForceField::accumulate(std::span<const BallTraceRecord> trace) {
    for (const BallTraceRecord& record : trace) {
        update_cell(record.lx, record.ly, record.lcx, record.lcy, record.possession);
    }
}

double ForceField::at(int x, int y, int c, Team team) const {
    if (!in_grid(x, y)) throw OutOfBoundsError(x, y);
    return data_[index(x, y, c, team)];
}

VectorGrid ForceField::grid(Team team) const {
    VectorGrid grid;
    grid.width = kWidth;
    grid.height = kHeight;
    grid.cells.resize(static_cast<std::size_t>(kWidth) * kHeight);
    for (int y = 0; y < kHeight; ++y) {
        for (int x = 0; x < kWidth; ++x) {
            grid.at(x, y) = {data_[index(x, y, 0, team)], data_[index(x, y, 1, team)]};
        }
    }
    return grid;
}

VectorGrid sum_fields(const ForceField& field) {
    VectorGrid grid;
    grid.width = ForceField::kWidth;
    grid.height = ForceField::kHeight;
    grid.cells.resize(static_cast<std::size_t>(grid.width) * grid.height);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            grid.at(x, y) = {
                field.at(x, y, 0, Team::home) + field.at(x, y, 0, Team::away),
                field.at(x, y, 1, Team::home) + field.at(x, y, 1, Team::away),
            };
        }
    }
    return grid;
}

std::array<std::uint8_t, 3> magnitude_color(double n, double big_n) {
    if (!(big_n > 0.0) || !(n >= 0.0) || n > big_n) throw BadNormalizerError(n, big_n);
    const double scaled = std::floor(255.0 * n / big_n);
    return {static_cast<std::uint8_t>(scaled), 255, 0};
}

namespace {

double max_magnitude(const VectorGrid& grid) {
    double best = 0.0;
    for (const auto& cell : grid.cells) {
        const double mag = std::hypot(cell[0], cell[1]);
        if (mag > best) best = mag;
    }
    return best;
}

void render_ppm(const VectorGrid& grid, std::ostream& out) {
    const double max_mag = max_magnitude(grid);
    const double normalizer = max_mag > 0.0 ? max_mag : 1.0;
    out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
    std::vector<char> row(static_cast<std::size_t>(grid.width) * 3);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            const auto& cell = grid.at(x, y);
            const auto rgb = magnitude_color(std::hypot(cell[0], cell[1]), normalizer);
            row[static_cast<std::size_t>(x) * 3 + 0] = static_cast<char>(rgb[0]);
            row[static_cast<std::size_t>(x) * 3 + 1] = static_cast<char>(rgb[1]);
            row[static_cast<std::size_t>(x) * 3 + 2] = static_cast<char>(rgb[2]);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void render_csv(const VectorGrid& grid, std::ostream& out) {
    out << "x,y,vx,vy\n";
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            const auto& cell = grid.at(x, y);
            if (cell[0] == 0.0 && cell[1] == 0.0) continue;
            out << x << "," << y << "," << format_double(cell[0]) << ","
                << format_double(cell[1]) << "\n";
        }
    }
}

}  // namespace

void render(const VectorGrid& grid, RenderMode mode, std::ostream& out) {
    if (mode == RenderMode::heatmap_ppm) {
        render_ppm(grid, out);
    } else {
        render_csv(grid, out);
    }
}

void render(const ForceField& field, Team team, RenderMode mode, std::ostream& out) {
    render(field.grid(team), mode, out);
}

}  // namespace fersml::field
