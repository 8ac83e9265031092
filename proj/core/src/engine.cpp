#include "fersml/engine.hpp"

#include <algorithm>
#include <cmath>

#include "text_util.hpp"

namespace fersml::sim {

std::string_view to_string(Team team) noexcept {
    return team == Team::home ? "home" : "away";
}

std::string_view to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::kickoff: return "kickoff";
        case EventKind::pass: return "pass";
        case EventKind::dribble: return "dribble";
        case EventKind::tackle: return "tackle";
        case EventKind::shot: return "shot";
        case EventKind::goal: return "goal";
        case EventKind::turnover: return "turnover";
        case EventKind::period_end: return "period_end";
    }
    return "kickoff";
}

WrongPlayerCountError::WrongPlayerCountError(std::size_t got)
    : FormationError("formation must place exactly 10 players, found " +
                     std::to_string(got)) {}

std::array<Vec2i, kTeamSize> place_formation(const Formation& formation, Team side) {
    if (formation.positions.size() != kTeamSize) {
        throw WrongPlayerCountError(formation.positions.size());
    }
    std::array<Vec2i, kTeamSize> spots{};
    for (int i = 0; i < kTeamSize; ++i) {
        const PlayerPosition& position = formation.positions[static_cast<std::size_t>(i)];
        if (side == Team::home) {
            spots[static_cast<std::size_t>(i)] = {position.coord_x, position.coord_y};
        } else {
            spots[static_cast<std::size_t>(i)] = {1024 - position.coord_x,
                                                  640 - position.coord_y};
        }
    }
    return spots;
}

double duel_keep_probability(double attacker_score, double defender_score) noexcept {
    const double a = std::max(attacker_score, 1.0);
    const double d = std::max(defender_score, 1.0);
    return a / (a + d);
}

const Skills& default_skills() noexcept {
    static const Skills skills{50, 50, 50};
    return skills;
}

const ProbTable& default_shutting_goal_table() noexcept {
    static const ProbTable table{{{5.0, 0.89}, {16.0, 0.84}, {30.0, 0.47}}};
    return table;
}

const ProbTable& default_gaining_ball_table() noexcept {
    static const ProbTable table{{{0.5, 0.89}, {1.0, 0.64}, {2.0, 0.06}}};
    return table;
}

namespace {

const std::vector<Factor>& factors_for(const ImpactOfSkills& impact, DuelKind duel) {
    switch (duel) {
        case DuelKind::dribbling: return impact.dribbling;
        case DuelKind::shielding: return impact.shielding;
        case DuelKind::tackling: return impact.tackling;
    }
    return impact.tackling;
}

const Skills& skills_of(const FersmlDocument& doc, int squad_number) {
    const Avatar* avatar = find_avatar(doc, squad_number);
    return avatar != nullptr ? avatar->estimations.skills : default_skills();
}

}  // namespace

DuelOutcome resolve_duel(const FersmlDocument& att_doc, const FersmlDocument& def_doc,
                         DuelKind duel, int att_squad, int def_squad, SplitMix64& rng) {
    const double attacker =
        skill_weighted_score(skills_of(att_doc, att_squad),
                             factors_for(att_doc.simulation.impact_of_skills, duel));
    const double defender =
        skill_weighted_score(skills_of(def_doc, def_squad),
                             def_doc.simulation.impact_of_skills.tackling);
    const double keep = duel_keep_probability(attacker, defender);
    return rng.next_double() < keep ? DuelOutcome::attacker_keeps
                                    : DuelOutcome::defender_wins;
}

ShotOutcome attempt_shot(const Avatar& shooter, double dist_m, SplitMix64& rng) {
    const ProbTable& table = shooter.estimations.actions.shutting_goal.has_value()
                                 ? *shooter.estimations.actions.shutting_goal
                                 : default_shutting_goal_table();
    const double p = interpolate_prob(table, dist_m);
    return rng.next_double() < p ? ShotOutcome::goal : ShotOutcome::miss;
}

namespace {

// ---------------------------------------------------------------------------
// Tuning constants for the possession automaton. All behavior probabilities
// that are not dictated by the documents live here; values are calibrated so
// that default world cups land in the real-data goal range (see the
// calibration acceptance check).
// ---------------------------------------------------------------------------

constexpr int kKickoffHoldTicks = 10;
constexpr int kHoldMinTicks = 3;
constexpr int kHoldSpreadTicks = 10;  // hold = min + [0, spread)

constexpr double kPassShare = 0.65;   // pass vs dribble when out of shot range

constexpr double kPassSpeedUnits = 18.0;
constexpr double kDribbleSpeedUnits = 6.0;
constexpr double kShotSpeedUnits = 30.0;

constexpr double kMaxPassMeters = 32.0;
constexpr int kPassJitterUnits = 8;  // +/- on each axis

constexpr double kShotRangeMeters = 26.0;
constexpr double kShootBase = 0.20;
constexpr double kShootSlope = 0.30;  // eagerness grows as distance shrinks

// Number of consecutive shield duels the shooter must win before getting a
// strike away (covering defender, then the last man).
constexpr int kShieldDuels = 2;

// Pass-interception gate: probability that a reception is contested at all,
// as a function of how deep the landing point is (0 = own goal line,
// 1 = opponent goal line). Contested receptions roll the defender's
// gaining_ball table at a sampled micro marking distance.
constexpr double kInterceptBase = 0.55;
constexpr double kInterceptSlope = 0.50;
constexpr double kSecondContest = 1.0;  // chance (scaled by depth) of a second roll
constexpr double kThirdContest = 0.9;   // chance (scaled by depth) of a third roll
constexpr double kMicroMinMeters = 0.4;
constexpr double kMicroSpreadMeters = 1.1;

// Dribble challenge gate, by depth.
constexpr double kChallengeBase = 0.40;
constexpr double kChallengeSlope = 0.55;

constexpr double kDribbleMeters = 8.0;
constexpr int kDribbleLateralJitterUnits = 60;

constexpr int kGoalMouthHalfUnits = 36;  // ~7.3 m goal on the 105 m scale
constexpr int kMissExtraUnits = 60;

constexpr double kShootoutDistMeters = 11.0;

// Per-team RNG substreams: fixed XOR constants over the match seed, so home
// and away derive distinct but reproducible streams.
constexpr std::uint64_t kHomeStreamSalt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kAwayStreamSalt = 0xc2b2ae3d27d4eb4fULL;

constexpr int kPitchMaxX = 1024;
constexpr int kPitchMaxY = 640;

struct PlayerProfile {
    int player_id = 0;
    int squad_number = 0;
    Vec2i anchor;
    const Avatar* avatar = nullptr;  // may be null (defaults apply)
    const ProbTable* shoot_table = nullptr;
    const ProbTable* gain_table = nullptr;
    double dribble_score = 0.0;
    double shield_score = 0.0;
    double tackle_score = 0.0;
};

struct TeamCtx {
    const FersmlDocument* doc = nullptr;
    Team side = Team::home;
    std::array<PlayerProfile, kTeamSize> players{};
    Vec2i target_goal;  // the goal this team attacks
    int keeper_index = 0;  // player nearest the own goal
};

double dist_units(Vec2i a, Vec2i b) noexcept {
    const double dx = static_cast<double>(a.x - b.x);
    const double dy = static_cast<double>(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

Vec2i step_toward(Vec2i from, Vec2i to, double speed_units) noexcept {
    const double dx = static_cast<double>(to.x - from.x);
    const double dy = static_cast<double>(to.y - from.y);
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len <= speed_units) return to;
    const double scale = speed_units / len;
    return {from.x + static_cast<int>(std::llround(dx * scale)),
            from.y + static_cast<int>(std::llround(dy * scale))};
}

int clamp_x(int x) noexcept { return std::clamp(x, 0, kPitchMaxX); }
int clamp_y(int y) noexcept { return std::clamp(y, 0, kPitchMaxY); }

TeamCtx build_team(const FersmlDocument& doc, Team side) {
    if (doc.simulation.tactics.empty()) {
        throw FormationError("document provides no formation");
    }
    const Formation& formation = doc.simulation.tactics.front();
    const auto spots = place_formation(formation, side);
    const Lineup lineup = resolve_lineup(doc.coach, formation.name);

    TeamCtx team;
    team.doc = &doc;
    team.side = side;
    team.target_goal = side == Team::home ? Vec2i{kPitchMaxX, kPitchMaxY / 2}
                                          : Vec2i{0, kPitchMaxY / 2};
    const Vec2i own_goal = side == Team::home ? Vec2i{0, kPitchMaxY / 2}
                                              : Vec2i{kPitchMaxX, kPitchMaxY / 2};

    const ImpactOfSkills& impact = doc.simulation.impact_of_skills;
    for (int i = 0; i < kTeamSize; ++i) {
        const PlayerPosition& position = formation.positions[static_cast<std::size_t>(i)];
        PlayerProfile& player = team.players[static_cast<std::size_t>(i)];
        player.player_id = position.player_id;
        const auto found = lineup.find(position.player_id);
        if (found == lineup.end()) {
            throw FormationError("formation \"" + formation.name + "\" uses player_id " +
                                 std::to_string(position.player_id) +
                                 " with no starting-team entry");
        }
        player.squad_number = found->second;
        player.anchor = spots[static_cast<std::size_t>(i)];
        player.avatar = find_avatar(doc, player.squad_number);
        const Skills& skills =
            player.avatar != nullptr ? player.avatar->estimations.skills : default_skills();
        const Actions* actions =
            player.avatar != nullptr ? &player.avatar->estimations.actions : nullptr;
        player.shoot_table = actions != nullptr && actions->shutting_goal.has_value()
                                 ? &*actions->shutting_goal
                                 : &default_shutting_goal_table();
        player.gain_table = actions != nullptr && actions->gaining_ball.has_value()
                                ? &*actions->gaining_ball
                                : &default_gaining_ball_table();
        player.dribble_score = skill_weighted_score(skills, impact.dribbling);
        player.shield_score = skill_weighted_score(skills, impact.shielding);
        player.tackle_score = skill_weighted_score(skills, impact.tackling);
    }

    double best = dist_units(team.players[0].anchor, own_goal);
    for (int i = 1; i < kTeamSize; ++i) {
        const double d = dist_units(team.players[static_cast<std::size_t>(i)].anchor, own_goal);
        if (d < best) {
            best = d;
            team.keeper_index = i;
        }
    }
    return team;
}

enum class Phase { hold, pass_flight, dribble, shot_flight };

class MatchSim {
public:
    MatchSim(const FersmlDocument& home, const FersmlDocument& away,
             const PitchConfig& pitch, std::uint64_t seed, bool knockout)
        : pitch_(pitch),
          knockout_(knockout),
          teams_{build_team(home, Team::home), build_team(away, Team::away)},
          rngs_{SplitMix64(seed ^ kHomeStreamSalt), SplitMix64(seed ^ kAwayStreamSalt)} {
        result_.seed = seed;
    }

    MatchResult run() {
        const int first_half = pitch_.regulation_ticks / 2;
        const int second_half = pitch_.regulation_ticks - first_half;
        if (first_half > 0) {
            run_period(first_half, Team::home, "first half");
            emit_period_end("half_time");
        }
        if (second_half > 0) {
            run_period(second_half, Team::away, "second half");
            emit_period_end("full_time");
        }
        if (knockout_ && score_[0] == score_[1]) {
            run_period(kExtraTimeTicks / 2, Team::home, "extra time first half");
            emit_period_end("extra_time_half");
            run_period(kExtraTimeTicks / 2, Team::away, "extra time second half");
            emit_period_end("extra_time_end");
            if (score_[0] == score_[1]) run_shootout();
        }

        result_.home_goals = score_[0];
        result_.away_goals = score_[1];
        if (score_[0] != score_[1]) {
            result_.winner = score_[0] > score_[1] ? Team::home : Team::away;
        } else if (knockout_) {
            result_.winner = result_.shootout_home > result_.shootout_away ? Team::home
                                                                           : Team::away;
        }
        return std::move(result_);
    }

private:
    PitchConfig pitch_;
    bool knockout_;
    std::array<TeamCtx, 2> teams_;
    std::array<SplitMix64, 2> rngs_;
    MatchResult result_;
    std::array<int, 2> score_{0, 0};
    int tick_ = 0;

    // Automaton state.
    Team possession_ = Team::home;
    int holder_ = 0;  // index into the possessing team's players
    Vec2i ball_{kPitchMaxX / 2, kPitchMaxY / 2};
    Vec2i target_{kPitchMaxX / 2, kPitchMaxY / 2};
    Phase phase_ = Phase::hold;
    int hold_left_ = 0;
    int receiver_ = 0;        // pass_flight
    bool shot_is_goal_ = false;  // shot_flight

    TeamCtx& attacking() { return teams_[static_cast<std::size_t>(possession_)]; }
    TeamCtx& defending() { return teams_[static_cast<std::size_t>(other(possession_))]; }
    SplitMix64& rng(Team team) { return rngs_[static_cast<std::size_t>(team)]; }

    void emit(EventKind kind, Team team, int player_id, std::string detail) {
        result_.events.push_back({tick_, kind, team, player_id, std::move(detail)});
    }

    void emit_period_end(const char* detail) {
        // Attributed to the side kicking off next period; team is
        // informational here.
        result_.events.push_back({tick_, EventKind::period_end, Team::home, 0, detail});
    }

    double progress_of(Team team, Vec2i p) const noexcept {
        const double x = static_cast<double>(p.x) / kPitchMaxX;
        return team == Team::home ? x : 1.0 - x;
    }

    int nearest_player(const TeamCtx& team, Vec2i p) const noexcept {
        int best = 0;
        double best_dist = dist_units(team.players[0].anchor, p);
        for (int i = 1; i < kTeamSize; ++i) {
            const double d = dist_units(team.players[static_cast<std::size_t>(i)].anchor, p);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        return best;
    }

    void start_kickoff(Team team, const char* detail) {
        possession_ = team;
        ball_ = {kPitchMaxX / 2, kPitchMaxY / 2};
        target_ = ball_;
        holder_ = nearest_player(attacking(), ball_);
        phase_ = Phase::hold;
        hold_left_ = kKickoffHoldTicks;
        emit(EventKind::kickoff, team, attacking().players[static_cast<std::size_t>(holder_)].player_id,
             detail);
    }

    void switch_possession(int new_holder_index, const char* reason, int player_id) {
        emit(EventKind::turnover, other(possession_), player_id, reason);
        possession_ = other(possession_);
        holder_ = new_holder_index;
        target_ = ball_;
        phase_ = Phase::hold;
        hold_left_ = kHoldMinTicks +
                     static_cast<int>(rng(possession_).next_below(kHoldSpreadTicks));
    }

    void run_period(int ticks, Team kickoff_team, const char* kickoff_detail) {
        start_kickoff(kickoff_team, kickoff_detail);
        for (int i = 0; i < ticks; ++i) {
            result_.ball_trace.push_back(
                {tick_, ball_.x, ball_.y, target_.x, target_.y, possession_});
            advance();
            ++tick_;
        }
    }

    void advance() {
        switch (phase_) {
            case Phase::hold:
                if (--hold_left_ <= 0) choose_action();
                break;
            case Phase::pass_flight:
                ball_ = step_toward(ball_, target_, kPassSpeedUnits);
                if (ball_ == target_) resolve_pass_arrival();
                break;
            case Phase::dribble:
                ball_ = step_toward(ball_, target_, kDribbleSpeedUnits);
                if (ball_ == target_) resolve_dribble_arrival();
                break;
            case Phase::shot_flight:
                ball_ = step_toward(ball_, target_, kShotSpeedUnits);
                if (ball_ == target_) resolve_shot_arrival();
                break;
        }
    }

    void hold_again() {
        phase_ = Phase::hold;
        target_ = ball_;
        hold_left_ = kHoldMinTicks +
                     static_cast<int>(rng(possession_).next_below(kHoldSpreadTicks));
    }

    void choose_action() {
        TeamCtx& att = attacking();
        const PlayerProfile& holder = att.players[static_cast<std::size_t>(holder_)];
        const double dist_goal_m = pitch_.meters(dist_units(ball_, att.target_goal));
        SplitMix64& att_rng = rng(possession_);

        if (dist_goal_m <= kShotRangeMeters) {
            const double eagerness =
                kShootBase + kShootSlope * (1.0 - dist_goal_m / kShotRangeMeters);
            if (att_rng.next_double() < eagerness) {
                start_shot_sequence(holder, dist_goal_m);
                return;
            }
        }
        if (att_rng.next_double() < kPassShare) {
            start_pass(holder);
        } else {
            start_dribble();
        }
    }

    void start_shot_sequence(const PlayerProfile& holder, double dist_goal_m) {
        TeamCtx& def = defending();
        const int defender_idx = nearest_player(def, ball_);
        const PlayerProfile& defender = def.players[static_cast<std::size_t>(defender_idx)];

        // Mandatory shield duels before every shot.
        const double keep =
            duel_keep_probability(holder.shield_score, defender.tackle_score);
        for (int duel = 0; duel < kShieldDuels; ++duel) {
            if (rng(possession_).next_double() >= keep) {
                emit(EventKind::tackle, def.side, defender.player_id,
                     "dispossessed the shooter");
                switch_possession(defender_idx, "shield duel lost", defender.player_id);
                return;
            }
        }

        emit(EventKind::shot, possession_, holder.player_id,
             "from " + fersml::detail::format_double(dist_goal_m) + " m");
        const double p = interpolate_prob(*holder.shoot_table, dist_goal_m);
        SplitMix64& att_rng = rng(possession_);
        shot_is_goal_ = att_rng.next_double() < p;

        TeamCtx& att = attacking();
        int gy;
        if (shot_is_goal_) {
            gy = att.target_goal.y - kGoalMouthHalfUnits +
                 static_cast<int>(att_rng.next_below(2 * kGoalMouthHalfUnits + 1));
        } else {
            const int off = kGoalMouthHalfUnits +
                            static_cast<int>(att_rng.next_below(kMissExtraUnits + 1));
            gy = att_rng.next_below(2) == 0 ? att.target_goal.y - off
                                            : att.target_goal.y + off;
        }
        target_ = {att.target_goal.x, clamp_y(gy)};
        phase_ = Phase::shot_flight;
    }

    void resolve_shot_arrival() {
        TeamCtx& def = defending();
        if (shot_is_goal_) {
            const PlayerProfile& holder =
                attacking().players[static_cast<std::size_t>(holder_)];
            emit(EventKind::goal, possession_, holder.player_id, "");
            ++score_[static_cast<std::size_t>(possession_)];
            start_kickoff(other(possession_), "restart after goal");
            return;
        }
        // Goal kick: the defending keeper restarts play.
        const PlayerProfile& keeper =
            def.players[static_cast<std::size_t>(def.keeper_index)];
        ball_ = keeper.anchor;
        switch_possession(def.keeper_index, "missed shot", keeper.player_id);
    }

    void start_pass(const PlayerProfile& holder) {
        TeamCtx& att = attacking();
        SplitMix64& att_rng = rng(possession_);

        // Weighted receiver choice: prefer goalward anchors in pass range.
        std::array<int, kTeamSize> weights{};
        int total = 0;
        const double ball_proj = progress_of(possession_, ball_);
        for (int i = 0; i < kTeamSize; ++i) {
            if (i == holder_) continue;
            const PlayerProfile& mate = att.players[static_cast<std::size_t>(i)];
            const double hop_m = pitch_.meters(dist_units(ball_, mate.anchor));
            if (hop_m > kMaxPassMeters) continue;
            const double gain = progress_of(possession_, mate.anchor) - ball_proj;
            int w = 1;
            if (gain > 0.02) w += 3;
            if (gain > 0.12) w += 2;
            weights[static_cast<std::size_t>(i)] = w;
            total += w;
        }
        if (total == 0) {
            // Nobody in range: fall back to the nearest teammate.
            int best = holder_ == 0 ? 1 : 0;
            double best_dist = dist_units(att.players[static_cast<std::size_t>(best)].anchor, ball_);
            for (int i = 0; i < kTeamSize; ++i) {
                if (i == holder_) continue;
                const double d =
                    dist_units(att.players[static_cast<std::size_t>(i)].anchor, ball_);
                if (d < best_dist) {
                    best_dist = d;
                    best = i;
                }
            }
            receiver_ = best;
        } else {
            int roll = static_cast<int>(att_rng.next_below(static_cast<std::uint64_t>(total)));
            receiver_ = holder_;
            for (int i = 0; i < kTeamSize; ++i) {
                roll -= weights[static_cast<std::size_t>(i)];
                if (weights[static_cast<std::size_t>(i)] > 0 && roll < 0) {
                    receiver_ = i;
                    break;
                }
            }
        }

        const PlayerProfile& mate = att.players[static_cast<std::size_t>(receiver_)];
        const int jx = static_cast<int>(att_rng.next_below(2 * kPassJitterUnits + 1)) -
                       kPassJitterUnits;
        const int jy = static_cast<int>(att_rng.next_below(2 * kPassJitterUnits + 1)) -
                       kPassJitterUnits;
        target_ = {clamp_x(mate.anchor.x + jx), clamp_y(mate.anchor.y + jy)};
        phase_ = Phase::pass_flight;
        emit(EventKind::pass, possession_, holder.player_id,
             "to player " + std::to_string(mate.player_id));
    }

    void resolve_pass_arrival() {
        TeamCtx& def = defending();
        SplitMix64& def_rng = rng(def.side);
        const double depth = progress_of(possession_, ball_);
        const double gate =
            std::clamp(kInterceptBase + kInterceptSlope * depth, 0.0, 1.0);
        const int defender_idx = nearest_player(def, ball_);
        const PlayerProfile& defender = def.players[static_cast<std::size_t>(defender_idx)];

        int contests = 1;
        if (def_rng.next_double() < kSecondContest * depth) ++contests;
        if (def_rng.next_double() < kThirdContest * depth) ++contests;
        for (int c = 0; c < contests; ++c) {
            if (def_rng.next_double() >= gate) continue;
            const double micro_m =
                kMicroMinMeters + kMicroSpreadMeters * def_rng.next_double();
            const double p = interpolate_prob(*defender.gain_table, micro_m);
            if (def_rng.next_double() < p) {
                switch_possession(defender_idx, "interception", defender.player_id);
                return;
            }
        }
        holder_ = receiver_;
        hold_again();
    }

    void start_dribble() {
        TeamCtx& att = attacking();
        SplitMix64& att_rng = rng(possession_);
        const double advance_units = kDribbleMeters / pitch_.meters_per_unit;
        const int dir = possession_ == Team::home ? 1 : -1;
        const int lateral =
            static_cast<int>(att_rng.next_below(2 * kDribbleLateralJitterUnits + 1)) -
            kDribbleLateralJitterUnits;
        target_ = {clamp_x(ball_.x + dir * static_cast<int>(std::llround(advance_units))),
                   clamp_y(ball_.y + lateral)};
        phase_ = Phase::dribble;
        emit(EventKind::dribble, possession_,
             att.players[static_cast<std::size_t>(holder_)].player_id, "");
    }

    void resolve_dribble_arrival() {
        TeamCtx& att = attacking();
        TeamCtx& def = defending();
        const double depth = progress_of(possession_, ball_);
        const double challenge =
            std::clamp(kChallengeBase + kChallengeSlope * depth, 0.0, 1.0);
        if (rng(def.side).next_double() < challenge) {
            const int defender_idx = nearest_player(def, ball_);
            const PlayerProfile& defender =
                def.players[static_cast<std::size_t>(defender_idx)];
            const PlayerProfile& holder = att.players[static_cast<std::size_t>(holder_)];
            const double keep =
                duel_keep_probability(holder.dribble_score, defender.tackle_score);
            if (rng(possession_).next_double() >= keep) {
                emit(EventKind::tackle, def.side, defender.player_id,
                     "won the ball from player " + std::to_string(holder.player_id));
                switch_possession(defender_idx, "tackle", defender.player_id);
                return;
            }
            emit(EventKind::tackle, def.side, defender.player_id,
                 "beaten by player " + std::to_string(holder.player_id));
        }
        hold_again();
    }

    void run_shootout() {
        std::array<int, 2> converted{0, 0};
        int round = 0;
        const auto kick = [&](Team team) {
            TeamCtx& ctx = teams_[static_cast<std::size_t>(team)];
            const PlayerProfile& kicker =
                ctx.players[static_cast<std::size_t>(round % kTeamSize)];
            const double p = interpolate_prob(*kicker.shoot_table, kShootoutDistMeters);
            const bool scored = rng(team).next_double() < p;
            if (scored) ++converted[static_cast<std::size_t>(team)];
            emit(EventKind::shot, team, kicker.player_id,
                 scored ? "shootout_scored" : "shootout_missed");
        };
        for (round = 0; round < 5; ++round) {
            kick(Team::home);
            kick(Team::away);
        }
        while (converted[0] == converted[1] && round < 1000) {
            kick(Team::home);
            kick(Team::away);
            ++round;
        }
        if (converted[0] == converted[1]) {
            // Unreachable in practice; decide deterministically.
            ++converted[static_cast<std::size_t>(
                rng(Team::home).next_below(2))];
        }
        result_.shootout_home = converted[0];
        result_.shootout_away = converted[1];
        emit_period_end("shootout_end");
    }
};

}  // namespace

MatchResult simulate_match(const FersmlDocument& home, const FersmlDocument& away,
                           const PitchConfig& pitch, std::uint64_t seed, bool knockout) {
    return MatchSim(home, away, pitch, seed, knockout).run();
}

}  // namespace fersml::sim
