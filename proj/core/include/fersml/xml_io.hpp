#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fersml/model.hpp"

namespace fersml::xml {

enum class DiagnosticKind {
    malformed_xml,    // not well-formed XML at the byte level
    unknown_element,  // well-formed but outside the closed grammar
    facet_violation,  // value breaks a facet or semantic rule
    missing_element,  // required content absent or out of order
};

std::string_view to_string(DiagnosticKind kind) noexcept;

struct ParseDiagnostic {
    int line = 1;    // 1-based
    int column = 1;  // 1-based, in Unicode-agnostic byte columns
    DiagnosticKind kind = DiagnosticKind::malformed_xml;
    std::string message;
};

// Either a document or a nonempty list of diagnostics, never both.
struct ParseResult {
    std::optional<FersmlDocument> document;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const noexcept { return document.has_value(); }
};

// Parse a FerSML byte stream. On success the document is guaranteed to pass
// validate_document with zero findings (semantic rules are applied here,
// with positions). Comments are ignored; DOCTYPE, CDATA, processing
// instructions and external entities are rejected; prob-table entries are
// sorted ascending by dist during binding.
ParseResult parse_fersml(std::string_view bytes);

// Serialize with a fixed element order and two-space indentation. Floats use
// the shortest decimal form that round-trips exactly, so
// parse_fersml(serialize_fersml(doc)) equals doc for every valid doc.
std::string serialize_fersml(const FersmlDocument& doc);

}  // namespace fersml::xml
