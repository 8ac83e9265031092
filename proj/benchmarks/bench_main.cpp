// Microbenchmarks for the hot paths: parsing, serialization, simulation,
// force-field accumulation, and the two-sample tests.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fersml/engine.hpp"
#include "fersml/forcefield.hpp"
#include "fersml/reference.hpp"
#include "fersml/stats.hpp"
#include "fersml/xml_io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::string& team_bytes() {
    static const std::string bytes =
        slurp(std::string(FERSML_BENCH_DATA_DIR) + "/team.xml");
    return bytes;
}

const fersml::FersmlDocument& team_document() {
    static const fersml::FersmlDocument doc =
        *fersml::xml::parse_fersml(team_bytes()).document;
    return doc;
}

void BM_ParseDocument(benchmark::State& state) {
    const std::string& bytes = team_bytes();
    for (auto _ : state) {
        auto result = fersml::xml::parse_fersml(bytes);
        benchmark::DoNotOptimize(result);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_ParseDocument);

void BM_SerializeDocument(benchmark::State& state) {
    const fersml::FersmlDocument& doc = team_document();
    for (auto _ : state) {
        std::string bytes = fersml::xml::serialize_fersml(doc);
        benchmark::DoNotOptimize(bytes);
    }
}
BENCHMARK(BM_SerializeDocument);

void BM_SimulateMatch(benchmark::State& state) {
    const fersml::FersmlDocument& doc = team_document();
    fersml::sim::PitchConfig pitch;
    pitch.regulation_ticks = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto result = fersml::sim::simulate_match(doc, doc, pitch, seed++, false);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_SimulateMatch)->Arg(5400)->Arg(54000);

void BM_ForceFieldAccumulate(benchmark::State& state) {
    const fersml::FersmlDocument& doc = team_document();
    fersml::sim::PitchConfig pitch;
    pitch.regulation_ticks = 54000;
    const auto match = fersml::sim::simulate_match(doc, doc, pitch, 7, false);
    for (auto _ : state) {
        fersml::field::ForceField field;
        field.accumulate(match.ball_trace);
        benchmark::DoNotOptimize(field);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(match.ball_trace.size()));
}
BENCHMARK(BM_ForceFieldAccumulate);

void BM_CompareDistributions(benchmark::State& state) {
    const auto real = fersml::stats::real_wc_goal_values();
    const std::vector<double> x(real.begin(), real.end());
    const auto rows = fersml::stats::simulated_wc_rows();
    const std::vector<double> y(rows[0].begin(), rows[0].end());
    for (auto _ : state) {
        auto result = fersml::stats::compare_distributions(x, y);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_CompareDistributions);

}  // namespace

BENCHMARK_MAIN();
