#include <string>

#include "fersml/xml_io.hpp"
#include "text_util.hpp"

namespace fersml::xml {

namespace {

using fersml::detail::format_double;

void escape_text(std::string& out, std::string_view text) {
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
}

void escape_attr(std::string& out, std::string_view text) {
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
}

class Writer {
public:
    std::string take() && { return std::move(out_); }

    void document(const FersmlDocument& doc) {
        out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        open("fersml");
        coach(doc.coach);
        for (const Avatar& avatar : doc.avatars) this->avatar(avatar);
        simulation(doc.simulation);
        close("fersml");
    }

private:
    std::string out_;
    int depth_ = 0;

    void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

    void open(std::string_view name) {
        indent();
        out_ += "<";
        out_ += name;
        out_ += ">\n";
        ++depth_;
    }

    void close(std::string_view name) {
        --depth_;
        indent();
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    void empty_element(std::string_view name) {
        indent();
        out_ += "<";
        out_ += name;
        out_ += " />\n";
    }

    void text_leaf(std::string_view name, std::string_view text) {
        if (text.empty()) {
            empty_element(name);
            return;
        }
        indent();
        out_ += "<";
        out_ += name;
        out_ += ">";
        escape_text(out_, text);
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    void int_leaf(std::string_view name, std::int64_t value) {
        text_leaf(name, std::to_string(value));
    }

    void attr(std::string_view name, std::string_view value) {
        out_ += " ";
        out_ += name;
        out_ += "=\"";
        escape_attr(out_, value);
        out_ += "\"";
    }

    void coach(const Coach& c) {
        open("coach");
        if (c.starting_team.empty()) {
            empty_element("starting_team");
        } else {
            open("starting_team");
            for (const LineupEntry& entry : c.starting_team) {
                indent();
                out_ += "<player";
                attr("player_id", std::to_string(entry.player_id));
                attr("squad_number", std::to_string(entry.squad_number));
                if (entry.formation_name.has_value()) {
                    attr("formation_name", *entry.formation_name);
                }
                out_ += " />\n";
            }
            close("starting_team");
        }
        close("coach");
    }

    void avatar(const Avatar& a) {
        open("avatar");
        person(a.person);
        open("estimations");
        skills(a.estimations.skills);
        actions(a.estimations.actions);
        close("estimations");
        close("avatar");
    }

    void person(const Person& p) {
        indent();
        out_ += "<person";
        attr("squad_number", std::to_string(p.squad_number));
        out_ += ">\n";
        ++depth_;
        text_leaf("firstname", p.firstname);
        text_leaf("lastname", p.lastname);
        int_leaf("age", p.age);
        int_leaf("height", p.height);
        int_leaf("weight", p.weight);
        text_leaf("dominant_foot", to_token(p.dominant_foot));
        text_leaf("usual_position", to_token(p.usual_position));
        text_leaf("actual_position", to_token(p.actual_position));
        close("person");
    }

    void skills(const Skills& s) {
        open("skills");
        int_leaf("football_sense", s.football_sense);
        int_leaf("ball_technique", s.ball_technique);
        int_leaf("quickness", s.quickness);
        close("skills");
    }

    void actions(const Actions& a) {
        const bool any = a.shutting_goal.has_value() || a.gaining_ball.has_value();
        if (!any) {
            empty_element("actions");
            return;
        }
        open("actions");
        if (a.shutting_goal.has_value()) prob_table("shutting_goal", *a.shutting_goal);
        if (a.gaining_ball.has_value()) prob_table("gaining_ball", *a.gaining_ball);
        close("actions");
    }

    void prob_table(std::string_view name, const ProbTable& table) {
        if (table.entries.empty()) {
            empty_element(name);
            return;
        }
        open(name);
        for (const ProbEntry& entry : table.entries) {
            indent();
            out_ += "<prob";
            attr("dist", format_double(entry.dist));
            out_ += ">";
            out_ += format_double(entry.prob);
            out_ += "</prob>\n";
        }
        close(name);
    }

    void factor_list(std::string_view name, const std::vector<Factor>& factors) {
        if (factors.empty()) {
            empty_element(name);
            return;
        }
        open(name);
        for (const Factor& factor : factors) {
            indent();
            out_ += "<factor";
            attr("name", factor.name);
            attr("percent", std::to_string(factor.percent));
            out_ += " />\n";
        }
        close(name);
    }

    void formation(const Formation& f) {
        indent();
        out_ += "<formation";
        attr("name", f.name);
        if (f.positions.empty()) {
            out_ += " />\n";
            return;
        }
        out_ += ">\n";
        ++depth_;
        for (const PlayerPosition& position : f.positions) {
            indent();
            out_ += "<player_position";
            attr("player_id", std::to_string(position.player_id));
            if (position.desc.has_value()) attr("desc", to_token(*position.desc));
            out_ += ">\n";
            ++depth_;
            int_leaf("coord_x", position.coord_x);
            int_leaf("coord_y", position.coord_y);
            close("player_position");
        }
        close("formation");
    }

    void simulation(const SimulationSpec& s) {
        open("simulation");
        open("control");
        open("impact_of_skills");
        factor_list("dribbling", s.impact_of_skills.dribbling);
        factor_list("shielding", s.impact_of_skills.shielding);
        factor_list("tackling", s.impact_of_skills.tackling);
        close("impact_of_skills");
        close("control");
        open("knowledge_base");
        open("tactics");
        open("play_system");
        for (const Formation& f : s.tactics) formation(f);
        close("play_system");
        close("tactics");
        close("knowledge_base");
        close("simulation");
    }
};

}  // namespace

std::string serialize_fersml(const FersmlDocument& doc) {
    Writer writer;
    writer.document(doc);
    return std::move(writer).take();
}

}  // namespace fersml::xml
