// fersml — command line front end: validate documents, run matches and world
// cups, render socceral force fields, and compare goal distributions.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fersml/engine.hpp"
#include "fersml/forcefield.hpp"
#include "fersml/match_io.hpp"
#include "fersml/reference.hpp"
#include "fersml/stats.hpp"
#include "fersml/tournament.hpp"
#include "fersml/xml_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRejected = 3;

constexpr const char* kBuiltinTable1 = "builtin:table1";

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buf).str();
}

void print_diagnostics(const std::string& path,
                       const std::vector<fersml::xml::ParseDiagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        std::cout << path << ":" << d.line << ":" << d.column << ": "
                  << to_string(d.kind) << ": " << d.message << "\n";
    }
}

// Loads and fully validates one document; on failure prints why and sets
// `exit_code` to the appropriate value.
std::optional<fersml::FersmlDocument> load_document(const std::string& path,
                                                    int& exit_code) {
    const auto text = read_file(path);
    if (!text.has_value()) {
        std::cout << path << ": error: cannot read file\n";
        exit_code = kExitUsage;
        return std::nullopt;
    }
    auto parsed = fersml::xml::parse_fersml(*text);
    if (!parsed.ok()) {
        print_diagnostics(path, parsed.diagnostics);
        exit_code = kExitInvalid;
        return std::nullopt;
    }
    return std::move(parsed.document);
}

bool write_text_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << body;
    out.flush();
    return out.good();
}

bool ensure_out_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return !ec && std::filesystem::is_directory(dir);
}

// --- validate ---------------------------------------------------------------

int run_validate(const std::vector<std::string>& paths) {
    bool any_io = false;
    bool any_invalid = false;
    for (const std::string& path : paths) {
        const auto text = read_file(path);
        if (!text.has_value()) {
            std::cout << path << ": error: cannot read file\n";
            any_io = true;
            continue;
        }
        auto parsed = fersml::xml::parse_fersml(*text);
        if (parsed.ok()) {
            std::cout << path << ": OK\n";
        } else {
            print_diagnostics(path, parsed.diagnostics);
            any_invalid = true;
        }
    }
    if (any_io) return kExitUsage;
    return any_invalid ? kExitInvalid : kExitOk;
}

// --- shared simulation helpers ----------------------------------------------

struct RenderPlan {
    bool requested = false;
    fersml::field::RenderMode mode = fersml::field::RenderMode::heatmap_ppm;
};

bool write_field_renders(const fersml::sim::MatchResult& match,
                         const RenderPlan& plan, const std::filesystem::path& dir) {
    fersml::field::ForceField field;
    field.accumulate(match.ball_trace);
    const bool heat = plan.mode == fersml::field::RenderMode::heatmap_ppm;
    const char* home_name = heat ? "home.ppm" : "home_vectors.csv";
    const char* away_name = heat ? "away.ppm" : "away_vectors.csv";
    const char* sum_name = heat ? "sum.ppm" : "sum_vectors.csv";

    const auto render_to = [&](const fersml::field::VectorGrid& grid,
                               const char* name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) return false;
        fersml::field::render(grid, plan.mode, out);
        out.flush();
        return out.good();
    };
    return render_to(field.grid(fersml::sim::Team::home), home_name) &&
           render_to(field.grid(fersml::sim::Team::away), away_name) &&
           render_to(fersml::field::sum_fields(field), sum_name);
}

// --- match ------------------------------------------------------------------

int run_match(const std::string& home_path, const std::string& away_path,
              std::uint64_t seed, int ticks, const std::string& out_dir,
              const RenderPlan& render, bool field_only) {
    int exit_code = kExitOk;
    const auto home = load_document(home_path, exit_code);
    if (!home.has_value()) return exit_code;
    const auto away = load_document(away_path, exit_code);
    if (!away.has_value()) return exit_code;

    fersml::sim::PitchConfig pitch;
    pitch.regulation_ticks = ticks;

    std::cout << "seed: " << seed << "\n";
    fersml::sim::MatchResult match;
    try {
        match = fersml::sim::simulate_match(*home, *away, pitch, seed, false);
    } catch (const fersml::Error& err) {
        std::cout << "error: " << err.what() << "\n";
        return kExitInvalid;
    }

    const std::filesystem::path dir(out_dir);
    if (!ensure_out_dir(dir)) {
        std::cout << "error: cannot create output directory " << out_dir << "\n";
        return kExitUsage;
    }

    if (!field_only) {
        std::ofstream events(dir / "events.jsonl", std::ios::binary);
        if (events) fersml::sim::write_events_jsonl(events, match.events);
        events.flush();
        std::ofstream trace(dir / "trace.csv", std::ios::binary);
        if (trace) fersml::sim::write_trace_csv(trace, match.ball_trace);
        trace.flush();
        if (!events.good() || !trace.good()) {
            std::cout << "error: cannot write match artifacts to " << out_dir << "\n";
            return kExitUsage;
        }
    }
    if (render.requested && !write_field_renders(match, render, dir)) {
        std::cout << "error: cannot write field renders to " << out_dir << "\n";
        return kExitUsage;
    }

    std::cout << "score: " << match.home_goals << ":" << match.away_goals << "\n";
    return kExitOk;
}

// --- worldcup ---------------------------------------------------------------

int run_worldcup(const std::vector<std::string>& team_paths, std::uint64_t seed,
                 int count, int ticks, const std::string& out_dir) {
    int exit_code = kExitOk;
    std::vector<fersml::FersmlDocument> teams;
    std::vector<std::string> names;
    if (team_paths.size() == 1) {
        const auto base = load_document(team_paths.front(), exit_code);
        if (!base.has_value()) return exit_code;
        for (int i = 0; i < fersml::sim::kWorldCupTeams; ++i) {
            teams.push_back(*base);
            names.push_back("team-" + std::to_string(i + 1));
        }
    } else {
        for (const std::string& path : team_paths) {
            auto doc = load_document(path, exit_code);
            if (!doc.has_value()) return exit_code;
            teams.push_back(std::move(*doc));
            names.push_back(std::filesystem::path(path).stem().string());
        }
    }

    fersml::sim::PitchConfig pitch;
    pitch.regulation_ticks = ticks;
    std::cout << "seed: " << seed << "\n";

    std::vector<fersml::sim::WorldCupResult> cups;
    cups.reserve(static_cast<std::size_t>(count));
    try {
        for (int i = 0; i < count; ++i) {
            cups.push_back(fersml::sim::simulate_world_cup(
                teams, pitch, seed + static_cast<std::uint64_t>(i), names));
        }
    } catch (const fersml::Error& err) {
        std::cout << "error: " << err.what() << "\n";
        return kExitInvalid;
    }

    std::string totals_body;
    std::vector<int> totals;
    std::vector<double> totals_values;
    for (std::size_t i = 0; i < cups.size(); ++i) {
        totals.push_back(cups[i].total_goals);
        totals_values.push_back(cups[i].total_goals);
        totals_body += std::to_string(cups[i].total_goals) + "\n";
        std::cout << "cup " << i + 1 << ": total_goals=" << cups[i].total_goals
                  << " champion=" << cups[i].team_names[static_cast<std::size_t>(
                                          cups[i].champion)]
                  << "\n";
    }

    nlohmann::ordered_json summary;
    summary["seed"] = seed;
    summary["count"] = count;
    summary["totals"] = totals;
    if (totals_values.size() >= 2) {
        const auto stats = fersml::stats::describe(totals_values);
        summary["stats"] = {{"n", stats.n},
                            {"mean", stats.mean},
                            {"std_corrected", stats.std_corrected}};
    }
    summary["cups"] = nlohmann::ordered_json::array();
    for (const auto& cup : cups) {
        summary["cups"].push_back(
            nlohmann::ordered_json::parse(fersml::sim::worldcup_summary_json(cup)));
    }

    const std::filesystem::path dir(out_dir);
    if (!ensure_out_dir(dir) ||
        !write_text_file(dir / "totals.txt", totals_body) ||
        !write_text_file(dir / "summary.json", summary.dump(2) + "\n")) {
        std::cout << "error: cannot write world cup artifacts to " << out_dir << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

// --- compare ----------------------------------------------------------------

std::optional<std::vector<double>> read_sample(const std::string& path,
                                               std::string& why) {
    if (path == kBuiltinTable1) {
        const auto values = fersml::stats::real_wc_goal_values();
        return std::vector<double>(values.begin(), values.end());
    }
    const auto text = read_file(path);
    if (!text.has_value()) {
        why = "cannot read file";
        return std::nullopt;
    }
    std::vector<double> values;
    std::istringstream lines(*text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
        if (trimmed.empty()) continue;
        try {
            std::size_t used = 0;
            const double value = std::stod(trimmed, &used);
            if (used != trimmed.size()) throw std::invalid_argument(trimmed);
            values.push_back(value);
        } catch (const std::exception&) {
            why = "line " + std::to_string(line_no) + " is not a number: \"" +
                  trimmed + "\"";
            return std::nullopt;
        }
    }
    if (values.size() < 2) {
        why = "needs at least 2 values, found " + std::to_string(values.size());
        return std::nullopt;
    }
    return values;
}

void print_test(const char* name, const char* stat_name,
                const fersml::stats::TestResult& r) {
    std::cout << name << ": " << stat_name << "=" << r.statistic << " z=" << r.z
              << " p=" << r.p << " reject=" << (r.reject ? "yes" : "no")
              << " ties=" << (r.ties_present ? "yes" : "no") << "\n";
}

int run_compare(const std::string& path_a, const std::string& path_b, double alpha) {
    std::string why;
    const auto a = read_sample(path_a, why);
    if (!a.has_value()) {
        std::cout << path_a << ": error: " << why << "\n";
        return kExitUsage;
    }
    const auto b = read_sample(path_b, why);
    if (!b.has_value()) {
        std::cout << path_b << ": error: " << why << "\n";
        return kExitUsage;
    }

    const auto result = fersml::stats::compare_distributions(*a, *b, alpha);
    print_test("mann-whitney", "U", result.mann_whitney);
    print_test("runs", "R", result.runs);
    if (result.overall_identical_not_rejected) {
        std::cout << "overall: identical distributions not rejected at alpha="
                  << alpha << "\n";
        return kExitOk;
    }
    std::cout << "overall: identical distributions REJECTED at alpha=" << alpha
              << "\n";
    return kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FerSML platform: validate documents, simulate football, "
                 "render socceral force fields, compare goal distributions"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "Validate FerSML documents");
    std::vector<std::string> validate_paths;
    validate->add_option("paths", validate_paths, "FerSML XML files")->required();

    // shared simulation options
    std::uint64_t seed = 42;
    int ticks = fersml::sim::kRegulationTicks;
    std::string out_dir = ".";
    std::string render_choice;

    // match
    auto* match = app.add_subcommand("match", "Simulate one match");
    std::string home_path, away_path;
    match->add_option("home", home_path, "home team document")->required();
    match->add_option("away", away_path, "away team document")->required();
    match->add_option("--seed", seed, "simulation seed (printed for provenance)");
    match->add_option("--ticks", ticks, "regulation ticks (100 ms each)")
        ->check(CLI::NonNegativeNumber);
    match->add_option("--out", out_dir, "output directory");
    match->add_option("--render", render_choice, "also render force fields")
        ->check(CLI::IsMember({"heatmap", "vectors"}));

    // worldcup
    auto* worldcup = app.add_subcommand("worldcup", "Simulate knockout world cups");
    std::vector<std::string> team_paths;
    int count = 1;
    worldcup->add_option("teams", team_paths, "one team document (replicated) or exactly 8")
        ->required();
    worldcup->add_option("--seed", seed, "base seed; cup i uses seed+i");
    worldcup->add_option("--count", count, "number of cups")->check(CLI::PositiveNumber);
    worldcup->add_option("--ticks", ticks, "regulation ticks (100 ms each)")
        ->check(CLI::NonNegativeNumber);
    worldcup->add_option("--out", out_dir, "output directory");

    // compare
    auto* compare = app.add_subcommand(
        "compare", "Two-sample tests (Mann-Whitney U and Wald-Wolfowitz runs)");
    std::string sample_a, sample_b;
    double alpha = 0.05;
    compare->add_option("sample_a", sample_a,
                        "file with one number per line, or builtin:table1")
        ->required();
    compare->add_option("sample_b", sample_b,
                        "file with one number per line, or builtin:table1")
        ->required();
    compare->add_option("--alpha", alpha, "significance level in (0,1)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));

    // render-field
    auto* render_field =
        app.add_subcommand("render-field", "Simulate a match and render its force fields");
    std::string rf_home, rf_away;
    render_field->add_option("home", rf_home, "home team document")->required();
    render_field->add_option("away", rf_away, "away team document")->required();
    render_field->add_option("--seed", seed, "simulation seed");
    render_field->add_option("--ticks", ticks, "regulation ticks (100 ms each)")
        ->check(CLI::NonNegativeNumber);
    render_field->add_option("--out", out_dir, "output directory");
    render_field
        ->add_option("--render", render_choice, "render mode (default heatmap)")
        ->check(CLI::IsMember({"heatmap", "vectors"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RenderPlan render;
    if (!render_choice.empty()) {
        render.requested = true;
        render.mode = render_choice == "heatmap"
                          ? fersml::field::RenderMode::heatmap_ppm
                          : fersml::field::RenderMode::vectors_csv;
    }

    if (validate->parsed()) return run_validate(validate_paths);
    if (match->parsed()) {
        return run_match(home_path, away_path, seed, ticks, out_dir, render, false);
    }
    if (worldcup->parsed()) {
        if (team_paths.size() != 1 &&
            team_paths.size() != fersml::sim::kWorldCupTeams) {
            std::cout << "error: worldcup needs 1 team document (replicated) or "
                         "exactly 8, got "
                      << team_paths.size() << "\n";
            return kExitUsage;
        }
        return run_worldcup(team_paths, seed, count, ticks, out_dir);
    }
    if (compare->parsed()) return run_compare(sample_a, sample_b, alpha);
    if (render_field->parsed()) {
        if (!render.requested) render.mode = fersml::field::RenderMode::heatmap_ppm;
        render.requested = true;
        return run_match(rf_home, rf_away, seed, ticks, out_dir, render, true);
    }
    return kExitUsage;
}
