#pragma once

#include <string>
#include <vector>

#include "fersml/model.hpp"

namespace fersml {

// One violated rule. `path` addresses the offending element or attribute in
// wire form ("/fersml/coach/starting_team/player[2]@squad_number"), `rule`
// is a stable machine-readable token ("squad_number-range"), `message` is
// human-readable and repeats the facet bounds.
struct Finding {
    std::string path;
    std::string rule;
    std::string message;

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const noexcept { return findings.empty(); }
};

// Check every grammar facet and semantic rule on an assembled document:
// integer/float ranges, positive integers, per-category factor percent sums,
// prob-table ordering and duplicate dists, duplicate starting-team entries,
// duplicate player_ids within a formation, and the at-least-one-formation
// rule. Findings are data; this never throws.
ValidationReport validate_document(const FersmlDocument& doc);

}  // namespace fersml
