#include "fersml/match_io.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "text_util.hpp"

namespace fersml::sim {

void write_events_jsonl(std::ostream& out, std::span<const MatchEvent> events) {
    for (const MatchEvent& event : events) {
        nlohmann::ordered_json line;
        line["tick"] = event.tick;
        line["kind"] = to_string(event.kind);
        line["team"] = to_string(event.team);
        line["player_id"] = event.player_id;
        line["detail"] = event.detail;
        out << line.dump() << "\n";
    }
}

void write_trace_csv(std::ostream& out, std::span<const BallTraceRecord> trace) {
    out << "tick,lx,ly,lcx,lcy,possession\n";
    for (const BallTraceRecord& record : trace) {
        out << record.tick << "," << record.lx << "," << record.ly << ","
            << record.lcx << "," << record.lcy << "," << to_string(record.possession)
            << "\n";
    }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

[[noreturn]] void bad_row(std::size_t line_number, const std::string& why) {
    throw TraceFormatError("trace.csv line " + std::to_string(line_number) + ": " + why);
}

int field_to_int(std::string_view field, std::size_t line_number, const char* name) {
    const auto value = fersml::detail::parse_int64(field);
    if (!value.has_value()) {
        bad_row(line_number, std::string(name) + " is not an integer: \"" +
                                 std::string(field) + "\"");
    }
    return static_cast<int>(*value);
}

}  // namespace

std::vector<BallTraceRecord> read_trace_csv(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    std::vector<BallTraceRecord> trace;

    if (!std::getline(in, line)) {
        throw TraceFormatError("trace.csv is empty: missing header");
    }
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "tick,lx,ly,lcx,lcy,possession") {
        bad_row(line_number, "unexpected header \"" + line + "\"");
    }

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6) {
            bad_row(line_number, "expected 6 fields, found " +
                                     std::to_string(fields.size()));
        }
        BallTraceRecord record;
        record.tick = field_to_int(fields[0], line_number, "tick");
        record.lx = field_to_int(fields[1], line_number, "lx");
        record.ly = field_to_int(fields[2], line_number, "ly");
        record.lcx = field_to_int(fields[3], line_number, "lcx");
        record.lcy = field_to_int(fields[4], line_number, "lcy");
        if (fields[5] == "home") {
            record.possession = Team::home;
        } else if (fields[5] == "away") {
            record.possession = Team::away;
        } else {
            bad_row(line_number, "possession must be home or away, found \"" +
                                     std::string(fields[5]) + "\"");
        }
        trace.push_back(record);
    }
    return trace;
}

}  // namespace fersml::sim
