#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fersml/forcefield.hpp"
#include "fersml/rng.hpp"

using namespace fersml;
using field::ForceField;
using field::Team;
using field::VectorGrid;

TEST_CASE("repeated updates converge as d*(1 - 2^-K)") {
    // With a constant displacement d from a zero start, K applications of
    // v <- (v + d)/2 give exactly d*(1 - 2^-K).
    ForceField ff;
    const double d = 7.0;       // lcx - lx = 17 - 10
    for (int k = 1; k <= 40; ++k) {
        ff.update_cell(10, 20, 17, 25, Team::home);
        const double expected_x = 7.0 * (1.0 - std::ldexp(1.0, -k));
        const double expected_y = 5.0 * (1.0 - std::ldexp(1.0, -k));
        CHECK(std::abs(ff.at(10, 20, 0, Team::home) - expected_x) <= 1e-9);
        CHECK(std::abs(ff.at(10, 20, 1, Team::home) - expected_y) <= 1e-9);
    }
    CHECK(ff.at(10, 20, 0, Team::home) < d);  // approaches but never reaches d
}

TEST_CASE("teams accumulate into disjoint layers") {
    ForceField ff;
    ff.update_cell(3, 4, 13, 4, Team::home);
    CHECK(ff.at(3, 4, 0, Team::home) == doctest::Approx(5.0));
    CHECK(ff.at(3, 4, 0, Team::away) == doctest::Approx(0.0));
    ff.update_cell(3, 4, 3, 24, Team::away);
    CHECK(ff.at(3, 4, 1, Team::away) == doctest::Approx(10.0));
    CHECK(ff.at(3, 4, 1, Team::home) == doctest::Approx(0.0));
    // Neighboring cells are untouched.
    CHECK(ff.at(4, 4, 0, Team::home) == doctest::Approx(0.0));
    CHECK(ff.at(2, 4, 0, Team::home) == doctest::Approx(0.0));
}

TEST_CASE("corner cells are addressable; outside throws") {
    ForceField ff;
    ff.update_cell(0, 0, 2, 2, Team::home);
    ff.update_cell(1024, 640, 1022, 638, Team::away);
    CHECK(ff.at(0, 0, 0, Team::home) == doctest::Approx(1.0));
    CHECK(ff.at(1024, 640, 0, Team::away) == doctest::Approx(-1.0));

    CHECK_THROWS_AS(ff.update_cell(-1, 0, 0, 0, Team::home), field::OutOfBoundsError);
    CHECK_THROWS_AS(ff.update_cell(0, -1, 0, 0, Team::home), field::OutOfBoundsError);
    CHECK_THROWS_AS(ff.update_cell(1025, 0, 0, 0, Team::home), field::OutOfBoundsError);
    CHECK_THROWS_AS(ff.update_cell(0, 641, 0, 0, Team::home), field::OutOfBoundsError);
}

TEST_CASE("accumulate matches a brute-force replay of the trace") {
    SplitMix64 rng(99);
    std::vector<field::BallTraceRecord> trace;
    for (int t = 0; t < 500; ++t) {
        field::BallTraceRecord r;
        r.tick = t;
        r.lx = static_cast<int>(rng.next_below(1025));
        r.ly = static_cast<int>(rng.next_below(641));
        r.lcx = static_cast<int>(rng.next_below(1025));
        r.lcy = static_cast<int>(rng.next_below(641));
        r.possession = (rng.next() & 1u) ? Team::home : Team::away;
        trace.push_back(r);
    }

    ForceField via_accumulate;
    via_accumulate.accumulate(trace);

    ForceField by_hand;
    for (const auto& r : trace) {
        by_hand.update_cell(r.lx, r.ly, r.lcx, r.lcy, r.possession);
    }

    for (const auto& r : trace) {
        for (int c = 0; c < 2; ++c) {
            CHECK(via_accumulate.at(r.lx, r.ly, c, r.possession) ==
                  doctest::Approx(by_hand.at(r.lx, r.ly, c, r.possession)));
        }
    }
}

TEST_CASE("grid extraction and the summed field") {
    ForceField ff;
    ff.update_cell(5, 6, 9, 6, Team::home);   // home x-component 2
    ff.update_cell(5, 6, 5, 14, Team::away);  // away y-component 4
    const VectorGrid home = ff.grid(Team::home);
    const VectorGrid away = ff.grid(Team::away);
    CHECK(home.width == 1025);
    CHECK(home.height == 641);
    CHECK(home.at(5, 6)[0] == doctest::Approx(2.0));
    CHECK(home.at(5, 6)[1] == doctest::Approx(0.0));
    CHECK(away.at(5, 6)[1] == doctest::Approx(4.0));

    const VectorGrid sum = field::sum_fields(ff);
    CHECK(sum.at(5, 6)[0] == doctest::Approx(2.0));
    CHECK(sum.at(5, 6)[1] == doctest::Approx(4.0));
    CHECK(sum.at(0, 0)[0] == doctest::Approx(0.0));
}

TEST_CASE("magnitude color ramp") {
    const auto zero = field::magnitude_color(0.0, 10.0);
    CHECK(zero[0] == 0);
    CHECK(zero[1] == 255);
    CHECK(zero[2] == 0);

    const auto full = field::magnitude_color(10.0, 10.0);
    CHECK(full[0] == 255);
    CHECK(full[1] == 255);
    CHECK(full[2] == 0);

    // floor(255 * 5 / 10) = 127
    const auto half = field::magnitude_color(5.0, 10.0);
    CHECK(half[0] == 127);

    // floor behavior just below a step
    const auto just_below = field::magnitude_color(0.999999, 255.0);
    CHECK(just_below[0] == 0);

    CHECK_THROWS_AS((void)field::magnitude_color(1.0, 0.0), field::BadNormalizerError);
    CHECK_THROWS_AS((void)field::magnitude_color(1.0, -1.0), field::BadNormalizerError);
    CHECK_THROWS_AS((void)field::magnitude_color(11.0, 10.0), field::BadNormalizerError);
    CHECK_THROWS_AS((void)field::magnitude_color(-0.5, 10.0), field::BadNormalizerError);
}

TEST_CASE("PPM rendering of a small grid") {
    VectorGrid grid;
    grid.width = 2;
    grid.height = 2;
    grid.cells.assign(4, {0.0, 0.0});
    grid.at(1, 0) = {3.0, 4.0};   // magnitude 5, the maximum
    grid.at(0, 1) = {0.0, 2.5};   // magnitude 2.5 -> floor(255*2.5/5) = 127

    std::ostringstream out(std::ios::binary);
    field::render(grid, field::RenderMode::heatmap_ppm, out);
    const std::string bytes = out.str();

    const std::string header = "P6\n2 2\n255\n";
    REQUIRE(bytes.size() == header.size() + 12);
    CHECK(bytes.substr(0, header.size()) == header);

    const auto* px = reinterpret_cast<const unsigned char*>(bytes.data() + header.size());
    // Row y=0 first: (0,0) zero, (1,0) max, then (0,1) half, (1,1) zero.
    CHECK(px[0] == 0);    CHECK(px[1] == 255);  CHECK(px[2] == 0);
    CHECK(px[3] == 255);  CHECK(px[4] == 255);  CHECK(px[5] == 0);
    CHECK(px[6] == 127);  CHECK(px[7] == 255);  CHECK(px[8] == 0);
    CHECK(px[9] == 0);    CHECK(px[10] == 255); CHECK(px[11] == 0);
}

TEST_CASE("an all-zero grid renders with normalizer 1") {
    VectorGrid grid;
    grid.width = 3;
    grid.height = 1;
    grid.cells.assign(3, {0.0, 0.0});
    std::ostringstream out(std::ios::binary);
    field::render(grid, field::RenderMode::heatmap_ppm, out);
    const std::string bytes = out.str();
    const std::string header = "P6\n3 1\n255\n";
    REQUIRE(bytes.size() == header.size() + 9);
    for (int i = 0; i < 3; ++i) {
        const auto* px =
            reinterpret_cast<const unsigned char*>(bytes.data() + header.size() + 3 * i);
        CHECK(px[0] == 0);
        CHECK(px[1] == 255);
        CHECK(px[2] == 0);
    }
}

TEST_CASE("full-size team render is exactly one pixel per cell") {
    ForceField ff;
    ff.update_cell(10, 20, 30, 40, Team::home);
    std::ostringstream out(std::ios::binary);
    field::render(ff, Team::home, field::RenderMode::heatmap_ppm, out);
    const std::string header = "P6\n1025 641\n255\n";
    CHECK(out.str().size() ==
          header.size() + std::size_t{3} * 1025 * 641);  // 1,971,091 bytes
}

TEST_CASE("vectors CSV lists nonzero cells in scan order") {
    VectorGrid grid;
    grid.width = 3;
    grid.height = 2;
    grid.cells.assign(6, {0.0, 0.0});
    grid.at(2, 0) = {1.5, 0.0};
    grid.at(0, 1) = {-2.0, 0.25};

    std::ostringstream out;
    field::render(grid, field::RenderMode::vectors_csv, out);
    CHECK(out.str() ==
          "x,y,vx,vy\n"
          "2,0,1.5,0\n"
          "0,1,-2,0.25\n");
}
