#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "fersml/engine.hpp"

namespace fersml::sim {

class TraceFormatError : public Error {
public:
    using Error::Error;
};

// One JSON object per line: {"tick":..,"kind":..,"team":..,"player_id":..,
// "detail":..}. Deterministic key order.
void write_events_jsonl(std::ostream& out, std::span<const MatchEvent> events);

// CSV with header tick,lx,ly,lcx,lcy,possession (possession is "home" or
// "away").
void write_trace_csv(std::ostream& out, std::span<const BallTraceRecord> trace);

// Inverse of write_trace_csv. Throws TraceFormatError on any malformed row.
std::vector<BallTraceRecord> read_trace_csv(std::istream& in);

}  // namespace fersml::sim
