#include "fersml/validate.hpp"

#include <cstdint>
#include <map>
#include <utility>

#include "text_util.hpp"

namespace fersml {

namespace {

using detail::format_double;

class Checker {
public:
    std::vector<Finding> findings;

    void add(std::string path, std::string rule, std::string message) {
        findings.push_back({std::move(path), std::move(rule), std::move(message)});
    }

    void check_int_range(const std::string& path, const char* facet, long long value,
                         long long lo, long long hi) {
        if (value < lo || value > hi) {
            add(path, std::string(facet) + "-range",
                std::string(facet) + " " + std::to_string(value) + " outside [" +
                    std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
    }

    void check_positive(const std::string& path, const char* name, std::int64_t value) {
        if (value < 1) {
            add(path, "positive-integer",
                std::string(name) + " " + std::to_string(value) + " must be >= 1");
        }
    }

    void check_real_range(const std::string& path, const char* facet, const char* rule,
                          double value, double lo, double hi) {
        if (!(value >= lo) || !(value <= hi)) {
            add(path, rule,
                std::string(facet) + " " + format_double(value) + " outside [" +
                    format_double(lo) + "," + format_double(hi) + "]");
        }
    }
};

void check_coach(Checker& c, const Coach& coach) {
    std::map<std::pair<int, std::optional<std::string>>, int> seen;
    for (std::size_t i = 0; i < coach.starting_team.size(); ++i) {
        const LineupEntry& entry = coach.starting_team[i];
        const std::string base =
            "/fersml/coach/starting_team/player[" + std::to_string(i) + "]";
        c.check_int_range(base + "@player_id", "player_id", entry.player_id, 1, 11);
        c.check_int_range(base + "@squad_number", "squad_number", entry.squad_number, 0, 99);
        if (++seen[{entry.player_id, entry.formation_name}] > 1) {
            if (entry.formation_name.has_value()) {
                c.add(base, "duplicate-entry",
                      "player_id " + std::to_string(entry.player_id) +
                          " has more than one entry for formation \"" +
                          *entry.formation_name + "\"");
            } else {
                c.add(base, "duplicate-default-entry",
                      "player_id " + std::to_string(entry.player_id) +
                          " has more than one entry without formation_name");
            }
        }
    }
}

void check_prob_table(Checker& c, const std::string& base, const ProbTable& table) {
    for (std::size_t j = 0; j < table.entries.size(); ++j) {
        const ProbEntry& entry = table.entries[j];
        const std::string entry_path = base + "/prob[" + std::to_string(j) + "]";
        c.check_real_range(entry_path + "@dist", "dist", "dist-range", entry.dist, 0.0,
                           1024.0);
        c.check_real_range(entry_path, "prob", "prob-range", entry.prob, 0.0, 1.0);
        if (j > 0) {
            const double prev = table.entries[j - 1].dist;
            if (entry.dist == prev) {
                c.add(entry_path + "@dist", "duplicate-dist",
                      "duplicate dist " + format_double(entry.dist) +
                          " in probability table");
            } else if (entry.dist < prev) {
                c.add(entry_path + "@dist", "unsorted-dist",
                      "prob entries not ascending by dist");
            }
        }
    }
}

void check_avatar(Checker& c, const Avatar& avatar, std::size_t index) {
    const std::string base = "/fersml/avatar[" + std::to_string(index) + "]";
    const Person& person = avatar.person;
    c.check_int_range(base + "/person@squad_number", "squad_number", person.squad_number,
                      0, 99);
    c.check_positive(base + "/person/age", "age", person.age);
    c.check_positive(base + "/person/height", "height", person.height);
    c.check_positive(base + "/person/weight", "weight", person.weight);

    const Skills& skills = avatar.estimations.skills;
    const std::string skills_base = base + "/estimations/skills";
    c.check_int_range(skills_base + "/football_sense", "football_sense",
                      skills.football_sense, 1, 100);
    c.check_int_range(skills_base + "/ball_technique", "ball_technique",
                      skills.ball_technique, 1, 100);
    c.check_int_range(skills_base + "/quickness", "quickness", skills.quickness, 1, 100);

    const Actions& actions = avatar.estimations.actions;
    if (actions.shutting_goal.has_value()) {
        check_prob_table(c, base + "/estimations/actions/shutting_goal",
                         *actions.shutting_goal);
    }
    if (actions.gaining_ball.has_value()) {
        check_prob_table(c, base + "/estimations/actions/gaining_ball",
                         *actions.gaining_ball);
    }
}

void check_factors(Checker& c, const char* category, const std::vector<Factor>& factors) {
    const std::string base =
        std::string("/fersml/simulation/control/impact_of_skills/") + category;
    bool all_in_range = true;
    long long sum = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Factor& factor = factors[k];
        const std::string path = base + "/factor[" + std::to_string(k) + "]@percent";
        c.check_int_range(path, "percent", factor.percent, 1, 100);
        if (factor.percent < 1 || factor.percent > 100) all_in_range = false;
        sum += factor.percent;
    }
    // The sum rule only fires when every percent is individually legal, so a
    // single bad percent yields exactly one finding.
    if (all_in_range && sum > 100) {
        c.add(base, "percent-sum",
              std::string(category) + " factor percents sum to " + std::to_string(sum) +
                  ", exceeding 100");
    }
}

void check_tactics(Checker& c, const std::vector<Formation>& tactics) {
    const std::string system_path = "/fersml/simulation/knowledge_base/tactics/play_system";
    if (tactics.empty()) {
        c.add(system_path, "formation-required",
              "play_system requires at least one formation");
        return;
    }
    for (std::size_t t = 0; t < tactics.size(); ++t) {
        const Formation& formation = tactics[t];
        const std::string base = system_path + "/formation[" + std::to_string(t) + "]";
        std::map<int, int> id_count;
        for (std::size_t j = 0; j < formation.positions.size(); ++j) {
            const PlayerPosition& pos = formation.positions[j];
            const std::string pos_base = base + "/player_position[" + std::to_string(j) + "]";
            c.check_int_range(pos_base + "@player_id", "player_id", pos.player_id, 1, 11);
            c.check_int_range(pos_base + "/coord_x", "coord_x", pos.coord_x, 0, 1024);
            c.check_int_range(pos_base + "/coord_y", "coord_y", pos.coord_y, 0, 640);
            if (++id_count[pos.player_id] > 1) {
                c.add(pos_base + "@player_id", "duplicate-player-position",
                      "player_id " + std::to_string(pos.player_id) +
                          " appears more than once in formation \"" + formation.name +
                          "\"");
            }
        }
    }
}

}  // namespace

ValidationReport validate_document(const FersmlDocument& doc) {
    Checker c;
    check_coach(c, doc.coach);
    for (std::size_t i = 0; i < doc.avatars.size(); ++i) check_avatar(c, doc.avatars[i], i);
    check_factors(c, "dribbling", doc.simulation.impact_of_skills.dribbling);
    check_factors(c, "shielding", doc.simulation.impact_of_skills.shielding);
    check_factors(c, "tackling", doc.simulation.impact_of_skills.tackling);
    check_tactics(c, doc.simulation.tactics);
    return ValidationReport{std::move(c.findings)};
}

}  // namespace fersml
