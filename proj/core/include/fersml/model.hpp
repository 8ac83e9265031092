#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fersml {

// Dialect version implemented by this library. The grammar is fixed and
// hard-coded; there is no generic schema engine.
inline constexpr std::string_view kDialectVersion = "0.0.2";

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyTableError : public Error {
public:
    EmptyTableError() : Error("probability table is empty") {}
};

class UnknownFactorError : public Error {
public:
    explicit UnknownFactorError(std::string factor);
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

class UnresolvedPlayerError : public Error {
public:
    UnresolvedPlayerError(int player_id, std::string_view formation_name);
    int player_id() const noexcept { return player_id_; }

private:
    int player_id_;
};

class AmbiguousEntryError : public Error {
public:
    AmbiguousEntryError(int player_id, std::string_view formation_name);
    int player_id() const noexcept { return player_id_; }

private:
    int player_id_;
};

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class DominantFoot { both, left, right };

// The closed position-token set of the grammar. The token "full fback" is
// spelled exactly as published; "full back" is not a member.
enum class Position {
    keeper,
    midfielder,
    defensive_midfielder,
    attacking_midfielder,
    winger,
    left_winger,
    right_winger,
    forward,
    deep_lying_forward,
    centre_forward,
    striker,
    inside_forward,
    playmaker,
    sweeper,
    defender,
    central_defender,
    centre_back,
    wing_back,
    full_fback,
    half_back,
};

inline constexpr int kPositionCount = 20;

std::string_view to_token(DominantFoot foot) noexcept;
std::string_view to_token(Position position) noexcept;

// Trim leading/trailing ASCII whitespace and collapse internal runs to a
// single space. Token matching happens on the normalized form because the
// wire format pads enum text freely.
std::string normalize_token(std::string_view raw);

std::optional<DominantFoot> parse_dominant_foot(std::string_view raw);
std::optional<Position> parse_position(std::string_view raw);

// ---------------------------------------------------------------------------
// Document model
// ---------------------------------------------------------------------------

struct LineupEntry {
    int player_id = 1;         // [1,11]
    int squad_number = 0;      // [0,99]
    std::optional<std::string> formation_name;

    bool operator==(const LineupEntry&) const = default;
};

struct Coach {
    std::vector<LineupEntry> starting_team;

    bool operator==(const Coach&) const = default;
};

struct Person {
    int squad_number = 0;      // [0,99]
    std::string firstname;
    std::string lastname;
    std::int64_t age = 1;      // positive integers
    std::int64_t height = 1;
    std::int64_t weight = 1;
    DominantFoot dominant_foot = DominantFoot::both;
    Position usual_position = Position::midfielder;
    Position actual_position = Position::midfielder;

    bool operator==(const Person&) const = default;
};

struct Skills {
    int football_sense = 1;    // [1,100]
    int ball_technique = 1;
    int quickness = 1;

    bool operator==(const Skills&) const = default;
};

struct ProbEntry {
    double dist = 0.0;         // [0,1024]
    double prob = 0.0;         // [0,1]

    bool operator==(const ProbEntry&) const = default;
};

// Distance-indexed probability table; entries ascend by dist, duplicates are
// a validation error (interpolation needs a function).
struct ProbTable {
    std::vector<ProbEntry> entries;

    bool operator==(const ProbTable&) const = default;
};

struct Actions {
    std::optional<ProbTable> shutting_goal;  // element name is verbatim wire vocabulary
    std::optional<ProbTable> gaining_ball;

    bool operator==(const Actions&) const = default;
};

struct Estimations {
    Skills skills;
    Actions actions;

    bool operator==(const Estimations&) const = default;
};

struct Avatar {
    Person person;
    Estimations estimations;

    bool operator==(const Avatar&) const = default;
};

struct Factor {
    std::string name;
    int percent = 1;           // [1,100]

    bool operator==(const Factor&) const = default;
};

struct ImpactOfSkills {
    std::vector<Factor> dribbling;
    std::vector<Factor> shielding;
    std::vector<Factor> tackling;

    bool operator==(const ImpactOfSkills&) const = default;
};

struct PlayerPosition {
    int player_id = 1;         // [1,11]
    std::optional<Position> desc;
    int coord_x = 0;           // [0,1024]
    int coord_y = 0;           // [0,640]

    bool operator==(const PlayerPosition&) const = default;
};

struct Formation {
    std::string name;
    std::vector<PlayerPosition> positions;

    bool operator==(const Formation&) const = default;
};

struct SimulationSpec {
    ImpactOfSkills impact_of_skills;
    std::vector<Formation> tactics;  // one or more

    bool operator==(const SimulationSpec&) const = default;
};

struct FersmlDocument {
    Coach coach;
    std::vector<Avatar> avatars;     // zero or more
    SimulationSpec simulation;

    bool operator==(const FersmlDocument&) const = default;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// player_id -> squad_number for a chosen formation.
using Lineup = std::map<int, int>;

// For each player_id in the starting team, pick the entry whose
// formation_name equals `formation_name`, falling back to the entry without
// a formation_name. Throws UnresolvedPlayerError when a player_id has
// entries but none applies, AmbiguousEntryError when two entries tie.
Lineup resolve_lineup(const Coach& coach, std::string_view formation_name);

// Piecewise-linear lookup: exact anchors return their prob, between anchors
// interpolate linearly, outside the anchor range clamp to the nearest
// anchor. Throws EmptyTableError.
double interpolate_prob(const ProbTable& table, double dist);

// Normalized weighted mean of the referenced skills:
// sum(percent_i * skill_i) / sum(percent_i). Factor names map to skills by
// lowercasing and replacing spaces with underscores ("ball technique" ->
// ball_technique). Throws UnknownFactorError. Empty factor list yields 0.
double skill_weighted_score(const Skills& skills, std::span<const Factor> factors);

// Convenience lookups. Return nullptr when absent.
const Formation* find_formation(const FersmlDocument& doc, std::string_view name) noexcept;
const Avatar* find_avatar(const FersmlDocument& doc, int squad_number) noexcept;

}  // namespace fersml
