#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fersml/engine.hpp"

namespace fersml::sim {

// The final-eight phase: quarter-finals, semi-finals, third place, final.
inline constexpr int kWorldCupTeams = 8;
inline constexpr int kWorldCupMatches = 8;

struct WorldCupResult {
    // QF1..QF4, SF1, SF2, third place, final.
    std::array<MatchResult, kWorldCupMatches> bracket;
    std::array<std::string, kWorldCupTeams> team_names;
    int total_goals = 0;  // regulation + extra time over all 8 matches
    int champion = 0;     // index into the team list
    std::uint64_t seed = 0;
};

// Run one knockout world cup over exactly 8 valid documents. Quarter-final
// i pairs teams 2i and 2i+1 (lower index at home); semi-finals pair the
// QF1/QF2 and QF3/QF4 winners; the third-place match takes the semi-final
// losers; per-match seeds derive deterministically from `seed`. `names`
// may be empty (teams are then named team-1..team-8) or give exactly 8
// names.
WorldCupResult simulate_world_cup(std::span<const FersmlDocument> teams,
                                  const PitchConfig& pitch, std::uint64_t seed,
                                  std::span<const std::string> names = {});

// Total goals of `count` world cups; run i uses seed base_seed + i.
std::vector<int> repeat_world_cups(std::span<const FersmlDocument> teams,
                                   const PitchConfig& pitch,
                                   std::uint64_t base_seed, int count,
                                   std::span<const std::string> names = {});

// Eight copies of one base document, the default team set.
std::array<FersmlDocument, kWorldCupTeams> make_default_teams(const FersmlDocument& base);

// Summary as a single JSON object: seed, champion, total_goals, and one
// bracket entry per match (round, teams, score, shootout if any, winner).
std::string worldcup_summary_json(const WorldCupResult& wc);

}  // namespace fersml::sim
