#include "fersml/model.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace fersml {

namespace {

std::string make_unknown_factor_message(const std::string& factor) {
    return "factor \"" + factor + "\" does not name a skill";
}

std::string make_unresolved_message(int player_id, std::string_view formation_name) {
    return "player_id " + std::to_string(player_id) +
           " has no applicable starting-team entry for formation \"" +
           std::string(formation_name) + "\"";
}

std::string make_ambiguous_message(int player_id, std::string_view formation_name) {
    return "player_id " + std::to_string(player_id) +
           " has more than one applicable starting-team entry for formation \"" +
           std::string(formation_name) + "\"";
}

}  // namespace

UnknownFactorError::UnknownFactorError(std::string factor)
    : Error(make_unknown_factor_message(factor)), factor_(std::move(factor)) {}

UnresolvedPlayerError::UnresolvedPlayerError(int player_id, std::string_view formation_name)
    : Error(make_unresolved_message(player_id, formation_name)), player_id_(player_id) {}

AmbiguousEntryError::AmbiguousEntryError(int player_id, std::string_view formation_name)
    : Error(make_ambiguous_message(player_id, formation_name)), player_id_(player_id) {}

std::string_view to_token(DominantFoot foot) noexcept {
    switch (foot) {
        case DominantFoot::both: return "both";
        case DominantFoot::left: return "left";
        case DominantFoot::right: return "right";
    }
    return "both";
}

namespace {

// Canonical spellings, grammar order. "full fback" is verbatim.
constexpr std::string_view kPositionTokens[kPositionCount] = {
    "keeper",
    "midfielder",
    "defensive midfielder",
    "attacking midfielder",
    "winger",
    "left winger",
    "right winger",
    "forward",
    "deep-lying forward",
    "centre forward",
    "striker",
    "inside forward",
    "playmaker",
    "sweeper",
    "defender",
    "central defender",
    "centre back",
    "wing back",
    "full fback",
    "half back",
};

bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string_view to_token(Position position) noexcept {
    return kPositionTokens[static_cast<int>(position)];
}

std::string normalize_token(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size() && is_space(raw[i])) ++i;
    bool pending_space = false;
    for (; i < raw.size(); ++i) {
        if (is_space(raw[i])) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(raw[i]);
    }
    return out;
}

std::optional<DominantFoot> parse_dominant_foot(std::string_view raw) {
    const std::string token = normalize_token(raw);
    if (token == "both") return DominantFoot::both;
    if (token == "left") return DominantFoot::left;
    if (token == "right") return DominantFoot::right;
    return std::nullopt;
}

std::optional<Position> parse_position(std::string_view raw) {
    const std::string token = normalize_token(raw);
    for (int i = 0; i < kPositionCount; ++i) {
        if (token == kPositionTokens[i]) return static_cast<Position>(i);
    }
    return std::nullopt;
}

Lineup resolve_lineup(const Coach& coach, std::string_view formation_name) {
    Lineup lineup;
    std::map<int, int> formation_hits;  // player_id -> count of matching entries
    std::map<int, int> default_hits;

    for (const LineupEntry& entry : coach.starting_team) {
        if (entry.formation_name.has_value()) {
            if (*entry.formation_name == formation_name) ++formation_hits[entry.player_id];
        } else {
            ++default_hits[entry.player_id];
        }
    }

    for (const LineupEntry& entry : coach.starting_team) {
        const int id = entry.player_id;
        if (formation_hits[id] > 1 || default_hits[id] > 1) {
            throw AmbiguousEntryError(id, formation_name);
        }
        const bool matches = entry.formation_name.has_value()
                                 ? *entry.formation_name == formation_name
                                 : formation_hits[id] == 0;
        if (matches) lineup[id] = entry.squad_number;
    }

    // Entries that exist only for other formations leave their player
    // unresolved.
    for (const LineupEntry& entry : coach.starting_team) {
        if (!lineup.contains(entry.player_id)) {
            throw UnresolvedPlayerError(entry.player_id, formation_name);
        }
    }
    return lineup;
}

double interpolate_prob(const ProbTable& table, double dist) {
    const auto& entries = table.entries;
    if (entries.empty()) throw EmptyTableError();
    if (dist <= entries.front().dist) return entries.front().prob;
    if (dist >= entries.back().dist) return entries.back().prob;
    const auto upper = std::lower_bound(
        entries.begin(), entries.end(), dist,
        [](const ProbEntry& e, double d) { return e.dist < d; });
    if (upper->dist == dist) return upper->prob;
    const auto lower = upper - 1;
    const double t = (dist - lower->dist) / (upper->dist - lower->dist);
    return lower->prob + t * (upper->prob - lower->prob);
}

namespace {

const int* skill_by_name(const Skills& skills, const std::string& normalized) {
    if (normalized == "football_sense") return &skills.football_sense;
    if (normalized == "ball_technique") return &skills.ball_technique;
    if (normalized == "quickness") return &skills.quickness;
    return nullptr;
}

}  // namespace

double skill_weighted_score(const Skills& skills, std::span<const Factor> factors) {
    double weighted = 0.0;
    double total_percent = 0.0;
    for (const Factor& factor : factors) {
        std::string key = normalize_token(factor.name);
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        std::replace(key.begin(), key.end(), ' ', '_');
        const int* skill = skill_by_name(skills, key);
        if (skill == nullptr) throw UnknownFactorError(factor.name);
        weighted += static_cast<double>(factor.percent) * static_cast<double>(*skill);
        total_percent += static_cast<double>(factor.percent);
    }
    if (total_percent == 0.0) return 0.0;
    return weighted / total_percent;
}

const Formation* find_formation(const FersmlDocument& doc, std::string_view name) noexcept {
    for (const Formation& formation : doc.simulation.tactics) {
        if (formation.name == name) return &formation;
    }
    return nullptr;
}

const Avatar* find_avatar(const FersmlDocument& doc, int squad_number) noexcept {
    for (const Avatar& avatar : doc.avatars) {
        if (avatar.person.squad_number == squad_number) return &avatar;
    }
    return nullptr;
}

}  // namespace fersml
