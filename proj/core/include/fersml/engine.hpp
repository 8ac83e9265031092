#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fersml/model.hpp"
#include "fersml/rng.hpp"

namespace fersml::sim {

class FormationError : public Error {
public:
    using Error::Error;
};

class WrongPlayerCountError : public FormationError {
public:
    explicit WrongPlayerCountError(std::size_t got);
};

// Exactly 10 players per side, a legacy of the original mobile game.
inline constexpr int kTeamSize = 10;
inline constexpr int kTickMilliseconds = 100;
inline constexpr int kRegulationTicks = 54000;  // 90 minutes
inline constexpr int kExtraTimeTicks = 18000;   // 2 x 15 minutes

enum class Team : int { home = 0, away = 1 };

std::string_view to_string(Team team) noexcept;
constexpr Team other(Team team) noexcept {
    return team == Team::home ? Team::away : Team::home;
}

struct PitchConfig {
    int width = 1024;   // fixed by the coordinate facets
    int height = 640;
    double meters_per_unit = 105.0 / 1024.0;
    int regulation_ticks = kRegulationTicks;

    double meters(double units) const noexcept { return units * meters_per_unit; }
};

struct Vec2i {
    int x = 0;
    int y = 0;

    bool operator==(const Vec2i&) const = default;
};

enum class EventKind {
    kickoff,
    pass,
    dribble,
    tackle,
    shot,
    goal,
    turnover,
    period_end,
};

std::string_view to_string(EventKind kind) noexcept;

struct MatchEvent {
    int tick = 0;
    EventKind kind = EventKind::kickoff;
    Team team = Team::home;
    int player_id = 0;  // 0 when not tied to one player
    std::string detail;

    bool operator==(const MatchEvent&) const = default;
};

// One record per simulated tick: ball position, ball target, possession.
struct BallTraceRecord {
    int tick = 0;
    int lx = 0;
    int ly = 0;
    int lcx = 0;
    int lcy = 0;
    Team possession = Team::home;

    bool operator==(const BallTraceRecord&) const = default;
};

struct MatchResult {
    int home_goals = 0;  // regulation + extra time; shootout excluded
    int away_goals = 0;
    std::vector<MatchEvent> events;
    std::vector<BallTraceRecord> ball_trace;
    std::uint64_t seed = 0;
    std::optional<Team> winner;  // always set for knockout matches
    int shootout_home = 0;       // penalty-shootout conversions, if one was held
    int shootout_away = 0;

    bool operator==(const MatchResult&) const = default;

    int goals(Team team) const noexcept {
        return team == Team::home ? home_goals : away_goals;
    }
};

enum class DuelKind { dribbling, shielding, tackling };
enum class DuelOutcome { attacker_keeps, defender_wins };

// Anchor coordinates for one side. Home uses the formation verbatim and
// defends x = 0; away mirrors through the pitch center:
// (x, y) -> (1024 - x, 640 - y). Throws WrongPlayerCountError unless the
// formation lists exactly 10 positions.
std::array<Vec2i, kTeamSize> place_formation(const Formation& formation, Team side);

// Keep probability of the duel law: scores are floored at 1, then
// a / (a + d).
double duel_keep_probability(double attacker_score, double defender_score) noexcept;

// Resolve one duel. att_squad/def_squad identify the avatars by squad
// number (players without an avatar fall back to the default skills). The
// attacker is scored with the attacker document's factor list for `duel`;
// the defender with the defender document's tackling factors. The attacker
// keeps the ball with probability a/(a+d).
DuelOutcome resolve_duel(const FersmlDocument& att_doc, const FersmlDocument& def_doc,
                         DuelKind duel, int att_squad, int def_squad, SplitMix64& rng);

// One shot from dist_m meters: goal with probability
// interpolate_prob(shooter's shutting_goal table, dist_m). Avatars without
// a table use the default table.
enum class ShotOutcome { goal, miss };
ShotOutcome attempt_shot(const Avatar& shooter, double dist_m, SplitMix64& rng);

// Defaults used when a squad number has no avatar (the grammar permits
// zero-avatar documents): all skills 50 and the sample probability tables.
const Skills& default_skills() noexcept;
const ProbTable& default_shutting_goal_table() noexcept;
const ProbTable& default_gaining_ball_table() noexcept;

// Simulate one match on a 100 ms tick grid. Both documents must be valid;
// each team plays its document's first formation (lineups resolved against
// that formation's name). Fully deterministic in (inputs, seed). When
// `knockout` is set and regulation ends level, extra time is played and, if
// still level, a best-of-5-then-sudden-death penalty shootout decides the
// winner; shootout conversions never count into the goal totals.
MatchResult simulate_match(const FersmlDocument& home, const FersmlDocument& away,
                           const PitchConfig& pitch, std::uint64_t seed,
                           bool knockout = false);

}  // namespace fersml::sim
