#pragma once

// Internal minimal XML scanner for the fixed FerSML dialect. Produces an
// element tree with byte-accurate line/column positions so every diagnostic
// can point at its source. Deliberately small: no namespaces, no DOCTYPE,
// no CDATA, no processing instructions (beyond the leading XML declaration),
// no external entities.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fersml::xml::detail {

struct XmlAttr {
    std::string name;
    std::string value;  // entity-decoded
    int line = 1;
    int column = 1;
};

struct XmlNode {
    std::string name;
    std::vector<XmlAttr> attrs;
    std::vector<XmlNode> children;
    std::string text;  // concatenated character data, entity-decoded
    int line = 1;      // position of the start tag's '<'
    int column = 1;
};

struct ScanError {
    int line = 1;
    int column = 1;
    std::string message;
};

struct ScanResult {
    std::optional<XmlNode> root;
    std::optional<ScanError> error;

    bool ok() const noexcept { return root.has_value(); }
};

ScanResult scan_xml(std::string_view bytes, int max_depth = 64);

}  // namespace fersml::xml::detail
