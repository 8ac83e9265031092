#include "fersml/tournament.hpp"

#include <utility>

#include <json.hpp>

namespace fersml::sim {

namespace {

int winner_index(const MatchResult& match, int home_team, int away_team) {
    const Team side = match.winner.value_or(Team::home);
    return side == Team::home ? home_team : away_team;
}

int loser_index(const MatchResult& match, int home_team, int away_team) {
    const Team side = match.winner.value_or(Team::home);
    return side == Team::home ? away_team : home_team;
}

// (home, away) team indices for each of the eight bracket slots, derived
// from the fixed pairing rule and the stored match winners.
std::array<std::pair<int, int>, kWorldCupMatches> bracket_pairings(
    const WorldCupResult& wc) {
    std::array<std::pair<int, int>, kWorldCupMatches> pairs{};
    for (int i = 0; i < 4; ++i) pairs[static_cast<std::size_t>(i)] = {2 * i, 2 * i + 1};
    std::array<int, 4> qf_winners{};
    std::array<int, 4> qf_losers{};
    for (int i = 0; i < 4; ++i) {
        qf_winners[static_cast<std::size_t>(i)] =
            winner_index(wc.bracket[static_cast<std::size_t>(i)], 2 * i, 2 * i + 1);
        qf_losers[static_cast<std::size_t>(i)] =
            loser_index(wc.bracket[static_cast<std::size_t>(i)], 2 * i, 2 * i + 1);
    }
    (void)qf_losers;
    pairs[4] = {qf_winners[0], qf_winners[1]};
    pairs[5] = {qf_winners[2], qf_winners[3]};
    const int sf1_winner = winner_index(wc.bracket[4], pairs[4].first, pairs[4].second);
    const int sf1_loser = loser_index(wc.bracket[4], pairs[4].first, pairs[4].second);
    const int sf2_winner = winner_index(wc.bracket[5], pairs[5].first, pairs[5].second);
    const int sf2_loser = loser_index(wc.bracket[5], pairs[5].first, pairs[5].second);
    pairs[6] = {sf1_loser, sf2_loser};
    pairs[7] = {sf1_winner, sf2_winner};
    return pairs;
}

constexpr const char* kRoundNames[kWorldCupMatches] = {
    "quarter-final", "quarter-final", "quarter-final", "quarter-final",
    "semi-final",    "semi-final",    "third-place",   "final",
};

}  // namespace

WorldCupResult simulate_world_cup(std::span<const FersmlDocument> teams,
                                  const PitchConfig& pitch, std::uint64_t seed,
                                  std::span<const std::string> names) {
    if (teams.size() != kWorldCupTeams) {
        throw Error("a world cup needs exactly 8 teams, got " +
                    std::to_string(teams.size()));
    }
    if (!names.empty() && names.size() != kWorldCupTeams) {
        throw Error("team name list must be empty or have exactly 8 entries");
    }

    WorldCupResult wc;
    wc.seed = seed;
    for (int i = 0; i < kWorldCupTeams; ++i) {
        wc.team_names[static_cast<std::size_t>(i)] =
            names.empty() ? "team-" + std::to_string(i + 1)
                          : names[static_cast<std::size_t>(i)];
    }

    SplitMix64 seed_stream(seed);
    std::array<std::uint64_t, kWorldCupMatches> match_seeds{};
    for (auto& s : match_seeds) s = seed_stream.next();

    const auto play = [&](int slot, int home_team, int away_team) {
        wc.bracket[static_cast<std::size_t>(slot)] = simulate_match(
            teams[static_cast<std::size_t>(home_team)],
            teams[static_cast<std::size_t>(away_team)], pitch,
            match_seeds[static_cast<std::size_t>(slot)], /*knockout=*/true);
        return winner_index(wc.bracket[static_cast<std::size_t>(slot)], home_team,
                            away_team);
    };

    std::array<int, 4> qf_winners{};
    std::array<int, 4> qf_losers{};
    for (int i = 0; i < 4; ++i) {
        qf_winners[static_cast<std::size_t>(i)] = play(i, 2 * i, 2 * i + 1);
        qf_losers[static_cast<std::size_t>(i)] =
            loser_index(wc.bracket[static_cast<std::size_t>(i)], 2 * i, 2 * i + 1);
    }
    (void)qf_losers;
    const int sf1_winner = play(4, qf_winners[0], qf_winners[1]);
    const int sf1_loser = loser_index(wc.bracket[4], qf_winners[0], qf_winners[1]);
    const int sf2_winner = play(5, qf_winners[2], qf_winners[3]);
    const int sf2_loser = loser_index(wc.bracket[5], qf_winners[2], qf_winners[3]);
    play(6, sf1_loser, sf2_loser);
    wc.champion = play(7, sf1_winner, sf2_winner);

    for (const MatchResult& match : wc.bracket) {
        wc.total_goals += match.home_goals + match.away_goals;
    }
    return wc;
}

std::vector<int> repeat_world_cups(std::span<const FersmlDocument> teams,
                                   const PitchConfig& pitch, std::uint64_t base_seed,
                                   int count, std::span<const std::string> names) {
    std::vector<int> totals;
    totals.reserve(count > 0 ? static_cast<std::size_t>(count) : 0);
    for (int i = 0; i < count; ++i) {
        totals.push_back(
            simulate_world_cup(teams, pitch, base_seed + static_cast<std::uint64_t>(i),
                               names)
                .total_goals);
    }
    return totals;
}

std::array<FersmlDocument, kWorldCupTeams> make_default_teams(
    const FersmlDocument& base) {
    std::array<FersmlDocument, kWorldCupTeams> teams{};
    teams.fill(base);
    return teams;
}

std::string worldcup_summary_json(const WorldCupResult& wc) {
    nlohmann::ordered_json summary;
    summary["seed"] = wc.seed;
    summary["champion"] = wc.team_names[static_cast<std::size_t>(wc.champion)];
    summary["total_goals"] = wc.total_goals;
    summary["bracket"] = nlohmann::ordered_json::array();

    const auto pairs = bracket_pairings(wc);
    for (int i = 0; i < kWorldCupMatches; ++i) {
        const MatchResult& match = wc.bracket[static_cast<std::size_t>(i)];
        const auto [home_team, away_team] = pairs[static_cast<std::size_t>(i)];
        nlohmann::ordered_json entry;
        entry["round"] = kRoundNames[i];
        entry["home"] = wc.team_names[static_cast<std::size_t>(home_team)];
        entry["away"] = wc.team_names[static_cast<std::size_t>(away_team)];
        entry["home_goals"] = match.home_goals;
        entry["away_goals"] = match.away_goals;
        if (match.shootout_home != 0 || match.shootout_away != 0) {
            entry["shootout"] = std::to_string(match.shootout_home) + ":" +
                                std::to_string(match.shootout_away);
        }
        entry["winner"] =
            wc.team_names[static_cast<std::size_t>(winner_index(match, home_team, away_team))];
        summary["bracket"].push_back(std::move(entry));
    }
    return summary.dump(2) + "\n";
}

}  // namespace fersml::sim
