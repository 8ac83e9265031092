#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "fersml/validate.hpp"
#include "fersml/xml_io.hpp"
#include "text_util.hpp"
#include "xml_scan.hpp"

namespace fersml::xml {

std::string_view to_string(DiagnosticKind kind) noexcept {
    switch (kind) {
        case DiagnosticKind::malformed_xml: return "malformed-xml";
        case DiagnosticKind::unknown_element: return "unknown-element";
        case DiagnosticKind::facet_violation: return "facet-violation";
        case DiagnosticKind::missing_element: return "missing-element";
    }
    return "malformed-xml";
}

namespace {

using detail::ScanResult;
using detail::XmlAttr;
using detail::XmlNode;
using fersml::detail::parse_double;
using fersml::detail::parse_int64;

const std::set<std::string_view> kKnownElements = {
    "fersml", "coach", "starting_team", "player", "avatar", "person", "firstname",
    "lastname", "age", "height", "weight", "dominant_foot", "usual_position",
    "actual_position", "estimations", "skills", "football_sense", "ball_technique",
    "quickness", "actions", "shutting_goal", "gaining_ball", "prob", "simulation",
    "control", "impact_of_skills", "dribbling", "shielding", "tackling", "factor",
    "knowledge_base", "tactics", "play_system", "formation", "player_position",
    "coord_x", "coord_y",
};

bool whitespace_only(std::string_view text) noexcept {
    return std::all_of(text.begin(), text.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    });
}

int saturate_to_int(std::int64_t v) noexcept {
    if (v > std::numeric_limits<int>::max()) return std::numeric_limits<int>::max();
    if (v < std::numeric_limits<int>::min()) return std::numeric_limits<int>::min();
    return static_cast<int>(v);
}

class Binder {
public:
    ParseResult bind(const XmlNode& root) {
        if (root.name != "fersml") {
            diag(root.line, root.column, DiagnosticKind::unknown_element,
                 "root element must be <fersml>, found <" + root.name + ">");
            return take_failure();
        }
        FersmlDocument doc;
        check_attrs(root, {});
        check_container(root);
        ChildCursor cursor(*this, root);
        if (const XmlNode* coach = cursor.require("coach")) bind_coach(*coach, doc.coach);
        for (const XmlNode* avatar : cursor.repeated("avatar")) {
            doc.avatars.emplace_back();
            bind_avatar(*avatar, doc.avatars.back(), doc.avatars.size() - 1);
        }
        if (const XmlNode* simulation = cursor.require("simulation")) {
            bind_simulation(*simulation, doc.simulation);
        }
        cursor.finish();

        if (!diags_.empty()) return take_failure();

        // Semantic rules, reported at the registered source positions.
        const ValidationReport report = validate_document(doc);
        for (const Finding& finding : report.findings) {
            const auto it = positions_.find(finding.path);
            const int line = it != positions_.end() ? it->second.first : root.line;
            const int column = it != positions_.end() ? it->second.second : root.column;
            diag(line, column, DiagnosticKind::facet_violation, finding.message);
        }
        if (!diags_.empty()) return take_failure();

        ParseResult result;
        result.document = std::move(doc);
        return result;
    }

    // --- diagnostics ---------------------------------------------------

    void diag(int line, int column, DiagnosticKind kind, std::string message) {
        diags_.push_back({line, column, kind, std::move(message)});
    }

    std::vector<ParseDiagnostic> diags_;

private:
    std::map<std::string, std::pair<int, int>> positions_;

    ParseResult take_failure() {
        ParseResult result;
        result.diagnostics = std::move(diags_);
        return result;
    }

    void reg(const std::string& path, const XmlNode& node) {
        positions_.emplace(path, std::make_pair(node.line, node.column));
    }

    void reg(const std::string& path, const XmlAttr& attr) {
        positions_.emplace(path, std::make_pair(attr.line, attr.column));
    }

    // --- structural helpers ---------------------------------------------

    class ChildCursor {
    public:
        ChildCursor(Binder& binder, const XmlNode& parent)
            : binder_(binder), parent_(parent) {}

        const XmlNode* require(std::string_view name) {
            if (broken_) return nullptr;
            if (index_ >= parent_.children.size()) {
                broken_ = true;
                binder_.diag(parent_.line, parent_.column, DiagnosticKind::missing_element,
                             "<" + parent_.name + "> is missing required element <" +
                                 std::string(name) + ">");
                return nullptr;
            }
            const XmlNode& found = parent_.children[index_];
            if (found.name == name) {
                ++index_;
                return &found;
            }
            broken_ = true;
            report_unexpected(found, name);
            return nullptr;
        }

        std::vector<const XmlNode*> repeated(std::string_view name) {
            std::vector<const XmlNode*> nodes;
            while (!broken_ && index_ < parent_.children.size() &&
                   parent_.children[index_].name == name) {
                nodes.push_back(&parent_.children[index_]);
                ++index_;
            }
            return nodes;
        }

        void finish() {
            if (broken_ || index_ >= parent_.children.size()) return;
            broken_ = true;
            report_unexpected(parent_.children[index_], {});
        }

    private:
        void report_unexpected(const XmlNode& found, std::string_view expected) {
            if (!kKnownElements.contains(found.name)) {
                binder_.diag(found.line, found.column, DiagnosticKind::unknown_element,
                             "element <" + found.name + "> is not part of the dialect");
                return;
            }
            std::string message = "element <" + found.name + "> is not allowed here in <" +
                                  parent_.name + ">";
            if (!expected.empty()) {
                message += "; expected <" + std::string(expected) + ">";
            }
            binder_.diag(found.line, found.column, DiagnosticKind::missing_element,
                         std::move(message));
        }

        Binder& binder_;
        const XmlNode& parent_;
        std::size_t index_ = 0;
        bool broken_ = false;
    };

    void check_attrs(const XmlNode& node, std::initializer_list<std::string_view> allowed) {
        for (const XmlAttr& attr : node.attrs) {
            if (std::find(allowed.begin(), allowed.end(), attr.name) == allowed.end()) {
                diag(attr.line, attr.column, DiagnosticKind::unknown_element,
                     "attribute \"" + attr.name + "\" is not allowed on <" + node.name +
                         ">");
            }
        }
    }

    // Containers carry no character data of their own.
    void check_container(const XmlNode& node) {
        if (!whitespace_only(node.text)) {
            diag(node.line, node.column, DiagnosticKind::unknown_element,
                 "unexpected text content in <" + node.name + ">");
        }
    }

    // Leaves carry no child elements.
    bool check_leaf(const XmlNode& node) {
        if (!node.children.empty()) {
            const XmlNode& child = node.children.front();
            diag(child.line, child.column, DiagnosticKind::unknown_element,
                 "element <" + child.name + "> is not allowed inside <" + node.name + ">");
            return false;
        }
        return true;
    }

    const XmlAttr* find_attr(const XmlNode& node, std::string_view name) const {
        for (const XmlAttr& attr : node.attrs) {
            if (attr.name == name) return &attr;
        }
        return nullptr;
    }

    const XmlAttr* require_attr(const XmlNode& node, std::string_view name) {
        const XmlAttr* attr = find_attr(node, name);
        if (attr == nullptr) {
            diag(node.line, node.column, DiagnosticKind::missing_element,
                 "<" + node.name + "> is missing required attribute \"" +
                     std::string(name) + "\"");
        }
        return attr;
    }

    // --- lexical helpers --------------------------------------------------

    std::optional<std::int64_t> lex_int(int line, int column, const std::string& site,
                                        std::string_view raw) {
        const std::string text = normalize_token(raw);
        const auto value = parse_int64(text);
        if (!value.has_value()) {
            diag(line, column, DiagnosticKind::facet_violation,
                 site + ": invalid integer \"" + text + "\"");
        }
        return value;
    }

    std::optional<double> lex_double(int line, int column, const std::string& site,
                                     std::string_view raw) {
        const std::string text = normalize_token(raw);
        const auto value = parse_double(text);
        if (!value.has_value()) {
            diag(line, column, DiagnosticKind::facet_violation,
                 site + ": invalid number \"" + text + "\"");
        }
        return value;
    }

    int bind_int_attr(const XmlNode& node, const XmlAttr& attr) {
        const auto value = lex_int(attr.line, attr.column,
                                   node.name + "@" + attr.name, attr.value);
        return saturate_to_int(value.value_or(1));
    }

    std::int64_t bind_int64_leaf(const XmlNode& node) {
        check_leaf(node);
        check_attrs(node, {});
        return lex_int(node.line, node.column, node.name, node.text).value_or(1);
    }

    int bind_int_leaf(const XmlNode& node) {
        return saturate_to_int(bind_int64_leaf(node));
    }

    std::string bind_text_leaf(const XmlNode& node) {
        check_leaf(node);
        check_attrs(node, {});
        return node.text;
    }

    // --- element binders ---------------------------------------------------

    void bind_coach(const XmlNode& node, Coach& coach) {
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        const XmlNode* team = cursor.require("starting_team");
        cursor.finish();
        if (team == nullptr) return;

        check_attrs(*team, {});
        check_container(*team);
        ChildCursor players(*this, *team);
        std::size_t index = 0;
        for (const XmlNode* player : players.repeated("player")) {
            const std::string base =
                "/fersml/coach/starting_team/player[" + std::to_string(index) + "]";
            reg(base, *player);
            check_attrs(*player, {"player_id", "squad_number", "formation_name"});
            check_container(*player);
            check_leaf(*player);
            LineupEntry entry;
            if (const XmlAttr* attr = require_attr(*player, "player_id")) {
                entry.player_id = bind_int_attr(*player, *attr);
                reg(base + "@player_id", *attr);
            }
            if (const XmlAttr* attr = require_attr(*player, "squad_number")) {
                entry.squad_number = bind_int_attr(*player, *attr);
                reg(base + "@squad_number", *attr);
            }
            if (const XmlAttr* attr = find_attr(*player, "formation_name")) {
                entry.formation_name = attr->value;
            }
            coach.starting_team.push_back(std::move(entry));
            ++index;
        }
        players.finish();
    }

    void bind_person(const XmlNode& node, Person& person, const std::string& base) {
        check_attrs(node, {"squad_number"});
        check_container(node);
        if (const XmlAttr* attr = require_attr(node, "squad_number")) {
            person.squad_number = bind_int_attr(node, *attr);
            reg(base + "/person@squad_number", *attr);
        }
        ChildCursor cursor(*this, node);
        if (const XmlNode* e = cursor.require("firstname")) person.firstname = bind_text_leaf(*e);
        if (const XmlNode* e = cursor.require("lastname")) person.lastname = bind_text_leaf(*e);
        if (const XmlNode* e = cursor.require("age")) {
            person.age = bind_int64_leaf(*e);
            reg(base + "/person/age", *e);
        }
        if (const XmlNode* e = cursor.require("height")) {
            person.height = bind_int64_leaf(*e);
            reg(base + "/person/height", *e);
        }
        if (const XmlNode* e = cursor.require("weight")) {
            person.weight = bind_int64_leaf(*e);
            reg(base + "/person/weight", *e);
        }
        if (const XmlNode* e = cursor.require("dominant_foot")) {
            check_leaf(*e);
            check_attrs(*e, {});
            if (const auto foot = parse_dominant_foot(e->text)) {
                person.dominant_foot = *foot;
            } else {
                diag(e->line, e->column, DiagnosticKind::facet_violation,
                     "dominant_foot \"" + normalize_token(e->text) +
                         "\" is not one of both|left|right");
            }
        }
        if (const XmlNode* e = cursor.require("usual_position")) {
            person.usual_position = bind_position_leaf(*e);
        }
        if (const XmlNode* e = cursor.require("actual_position")) {
            person.actual_position = bind_position_leaf(*e);
        }
        cursor.finish();
    }

    Position bind_position_leaf(const XmlNode& node) {
        check_leaf(node);
        check_attrs(node, {});
        if (const auto position = parse_position(node.text)) return *position;
        diag(node.line, node.column, DiagnosticKind::facet_violation,
             node.name + " \"" + normalize_token(node.text) + "\" is not a position token");
        return Position::midfielder;
    }

    void bind_skills(const XmlNode& node, Skills& skills, const std::string& base) {
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        if (const XmlNode* e = cursor.require("football_sense")) {
            skills.football_sense = bind_int_leaf(*e);
            reg(base + "/football_sense", *e);
        }
        if (const XmlNode* e = cursor.require("ball_technique")) {
            skills.ball_technique = bind_int_leaf(*e);
            reg(base + "/ball_technique", *e);
        }
        if (const XmlNode* e = cursor.require("quickness")) {
            skills.quickness = bind_int_leaf(*e);
            reg(base + "/quickness", *e);
        }
        cursor.finish();
    }

    ProbTable bind_prob_table(const XmlNode& node, const std::string& base) {
        check_attrs(node, {});
        check_container(node);
        ProbTable table;
        std::vector<const XmlNode*> sources;
        ChildCursor cursor(*this, node);
        for (const XmlNode* prob : cursor.repeated("prob")) {
            check_attrs(*prob, {"dist"});
            check_leaf(*prob);
            ProbEntry entry;
            const XmlAttr* dist_attr = require_attr(*prob, "dist");
            if (dist_attr != nullptr) {
                entry.dist = lex_double(dist_attr->line, dist_attr->column,
                                        "prob@dist", dist_attr->value)
                                 .value_or(0.0);
            }
            entry.prob = lex_double(prob->line, prob->column, "prob", prob->text)
                             .value_or(0.0);
            table.entries.push_back(entry);
            sources.push_back(prob);
        }
        cursor.finish();

        // Sort ascending by dist (the in-memory invariant), carrying the
        // source nodes along so findings point at the right entry.
        std::vector<std::size_t> order(table.entries.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return table.entries[a].dist < table.entries[b].dist;
        });
        ProbTable sorted;
        sorted.entries.reserve(table.entries.size());
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            const std::size_t src = order[rank];
            sorted.entries.push_back(table.entries[src]);
            const std::string entry_path = base + "/prob[" + std::to_string(rank) + "]";
            reg(entry_path, *sources[src]);
            if (const XmlAttr* dist_attr = find_attr(*sources[src], "dist")) {
                reg(entry_path + "@dist", *dist_attr);
            } else {
                reg(entry_path + "@dist", *sources[src]);
            }
        }
        return sorted;
    }

    void bind_actions(const XmlNode& node, Actions& actions, const std::string& base) {
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        std::size_t index = 0;
        for (const XmlNode* child : cursor.repeated("shutting_goal")) {
            if (index++ == 0) {
                actions.shutting_goal = bind_prob_table(*child, base + "/shutting_goal");
            } else {
                diag(child->line, child->column, DiagnosticKind::missing_element,
                     "element <shutting_goal> appears more than once");
            }
        }
        index = 0;
        for (const XmlNode* child : cursor.repeated("gaining_ball")) {
            if (index++ == 0) {
                actions.gaining_ball = bind_prob_table(*child, base + "/gaining_ball");
            } else {
                diag(child->line, child->column, DiagnosticKind::missing_element,
                     "element <gaining_ball> appears more than once");
            }
        }
        cursor.finish();
    }

    void bind_avatar(const XmlNode& node, Avatar& avatar, std::size_t index) {
        const std::string base = "/fersml/avatar[" + std::to_string(index) + "]";
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        if (const XmlNode* person = cursor.require("person")) {
            bind_person(*person, avatar.person, base);
        }
        if (const XmlNode* estimations = cursor.require("estimations")) {
            check_attrs(*estimations, {});
            check_container(*estimations);
            ChildCursor inner(*this, *estimations);
            if (const XmlNode* skills = inner.require("skills")) {
                bind_skills(*skills, avatar.estimations.skills, base + "/estimations/skills");
            }
            if (const XmlNode* actions = inner.require("actions")) {
                bind_actions(*actions, avatar.estimations.actions,
                             base + "/estimations/actions");
            }
            inner.finish();
        }
        cursor.finish();
    }

    void bind_factors(const XmlNode& node, std::vector<Factor>& factors,
                      const char* category) {
        const std::string base =
            std::string("/fersml/simulation/control/impact_of_skills/") + category;
        reg(base, node);
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        std::size_t index = 0;
        for (const XmlNode* factor_node : cursor.repeated("factor")) {
            check_attrs(*factor_node, {"name", "percent"});
            check_leaf(*factor_node);
            Factor factor;
            if (const XmlAttr* attr = require_attr(*factor_node, "name")) {
                factor.name = attr->value;
            }
            if (const XmlAttr* attr = require_attr(*factor_node, "percent")) {
                factor.percent = bind_int_attr(*factor_node, *attr);
                reg(base + "/factor[" + std::to_string(index) + "]@percent", *attr);
            }
            factors.push_back(std::move(factor));
            ++index;
        }
        cursor.finish();
    }

    void bind_formation(const XmlNode& node, Formation& formation, std::size_t index) {
        const std::string base =
            "/fersml/simulation/knowledge_base/tactics/play_system/formation[" +
            std::to_string(index) + "]";
        check_attrs(node, {"name"});
        check_container(node);
        if (const XmlAttr* attr = require_attr(node, "name")) {
            formation.name = attr->value;
        }
        ChildCursor cursor(*this, node);
        std::size_t pos_index = 0;
        for (const XmlNode* pos_node : cursor.repeated("player_position")) {
            const std::string pos_base =
                base + "/player_position[" + std::to_string(pos_index) + "]";
            check_attrs(*pos_node, {"player_id", "desc"});
            check_container(*pos_node);
            PlayerPosition position;
            if (const XmlAttr* attr = require_attr(*pos_node, "player_id")) {
                position.player_id = bind_int_attr(*pos_node, *attr);
                reg(pos_base + "@player_id", *attr);
            }
            if (const XmlAttr* attr = find_attr(*pos_node, "desc")) {
                if (const auto desc = parse_position(attr->value)) {
                    position.desc = *desc;
                } else {
                    diag(attr->line, attr->column, DiagnosticKind::facet_violation,
                         "desc \"" + normalize_token(attr->value) +
                             "\" is not a position token");
                }
            }
            ChildCursor coords(*this, *pos_node);
            if (const XmlNode* e = coords.require("coord_x")) {
                position.coord_x = bind_int_leaf(*e);
                reg(pos_base + "/coord_x", *e);
            }
            if (const XmlNode* e = coords.require("coord_y")) {
                position.coord_y = bind_int_leaf(*e);
                reg(pos_base + "/coord_y", *e);
            }
            coords.finish();
            formation.positions.push_back(position);
            ++pos_index;
        }
        cursor.finish();
    }

    void bind_simulation(const XmlNode& node, SimulationSpec& simulation) {
        check_attrs(node, {});
        check_container(node);
        ChildCursor cursor(*this, node);
        if (const XmlNode* control = cursor.require("control")) {
            check_attrs(*control, {});
            check_container(*control);
            ChildCursor inner(*this, *control);
            if (const XmlNode* impact = inner.require("impact_of_skills")) {
                check_attrs(*impact, {});
                check_container(*impact);
                ChildCursor lists(*this, *impact);
                if (const XmlNode* e = lists.require("dribbling")) {
                    bind_factors(*e, simulation.impact_of_skills.dribbling, "dribbling");
                }
                if (const XmlNode* e = lists.require("shielding")) {
                    bind_factors(*e, simulation.impact_of_skills.shielding, "shielding");
                }
                if (const XmlNode* e = lists.require("tackling")) {
                    bind_factors(*e, simulation.impact_of_skills.tackling, "tackling");
                }
                lists.finish();
            }
            inner.finish();
        }
        if (const XmlNode* kb = cursor.require("knowledge_base")) {
            check_attrs(*kb, {});
            check_container(*kb);
            ChildCursor inner(*this, *kb);
            if (const XmlNode* tactics = inner.require("tactics")) {
                check_attrs(*tactics, {});
                check_container(*tactics);
                ChildCursor tac(*this, *tactics);
                if (const XmlNode* system = tac.require("play_system")) {
                    check_attrs(*system, {});
                    check_container(*system);
                    ChildCursor forms(*this, *system);
                    // formation+ : at least one
                    if (const XmlNode* first = forms.require("formation")) {
                        simulation.tactics.emplace_back();
                        bind_formation(*first, simulation.tactics.back(), 0);
                    }
                    std::size_t index = 1;
                    for (const XmlNode* extra : forms.repeated("formation")) {
                        simulation.tactics.emplace_back();
                        bind_formation(*extra, simulation.tactics.back(), index++);
                    }
                    forms.finish();
                }
                tac.finish();
            }
            inner.finish();
        }
        cursor.finish();
    }
};

}  // namespace

ParseResult parse_fersml(std::string_view bytes) {
    const ScanResult scan = detail::scan_xml(bytes);
    if (!scan.ok()) {
        ParseResult result;
        const detail::ScanError& error = *scan.error;
        result.diagnostics.push_back({error.line, error.column,
                                      DiagnosticKind::malformed_xml, error.message});
        return result;
    }
    Binder binder;
    return binder.bind(*scan.root);
}

}  // namespace fersml::xml
