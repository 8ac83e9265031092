#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "fersml/model.hpp"
#include "fersml/rng.hpp"
#include "fersml/validate.hpp"
#include "fersml/xml_io.hpp"
#include "support/doc_builder.hpp"

using namespace fersml;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string sample_bytes() {
    return slurp(std::string(FERSML_TEST_DATA_DIR) + "/sample.xml");
}

xml::ParseResult parse_ok(std::string_view bytes) {
    auto result = xml::parse_fersml(bytes);
    if (!result.ok()) {
        for (const auto& d : result.diagnostics) {
            MESSAGE(d.line << ":" << d.column << " " << xml::to_string(d.kind) << ": "
                           << d.message);
        }
    }
    REQUIRE(result.ok());
    CHECK(result.diagnostics.empty());
    return result;
}

// Expect failure with exactly one diagnostic; return it.
xml::ParseDiagnostic parse_one_diag(std::string_view bytes) {
    auto result = xml::parse_fersml(bytes);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    return result.diagnostics[0];
}

}  // namespace

TEST_CASE("diagnostic kinds have stable names") {
    CHECK(xml::to_string(xml::DiagnosticKind::malformed_xml) == "malformed-xml");
    CHECK(xml::to_string(xml::DiagnosticKind::unknown_element) == "unknown-element");
    CHECK(xml::to_string(xml::DiagnosticKind::facet_violation) == "facet-violation");
    CHECK(xml::to_string(xml::DiagnosticKind::missing_element) == "missing-element");
}

TEST_CASE("the shipped sample parses into the expected model") {
    const auto result = parse_ok(sample_bytes());
    CHECK(*result.document == testsupport::make_sample_document());
    CHECK(validate_document(*result.document).ok());
}

TEST_CASE("serialize/parse round-trips the sample exactly") {
    const auto doc = testsupport::make_sample_document();
    const std::string bytes = xml::serialize_fersml(doc);
    const auto again = parse_ok(bytes);
    CHECK(*again.document == doc);
    // Serialization is a fixed point: re-serializing yields identical bytes.
    CHECK(xml::serialize_fersml(*again.document) == bytes);
}

TEST_CASE("serialize/parse round-trips randomized documents") {
    SplitMix64 rng(0x5eedu);
    for (int i = 0; i < 30; ++i) {
        CAPTURE(i);
        const auto doc = testsupport::random_document(rng);
        REQUIRE(validate_document(doc).ok());
        const std::string bytes = xml::serialize_fersml(doc);
        const auto parsed = parse_ok(bytes);
        CHECK(*parsed.document == doc);
        CHECK(xml::serialize_fersml(*parsed.document) == bytes);
    }
}

TEST_CASE("escaped characters survive the round trip") {
    auto doc = testsupport::make_sample_document();
    doc.avatars[0].person.firstname = "A & B <tag> \"q\" 'a'";
    doc.avatars[0].person.lastname = "x&#amp;";
    const auto parsed = parse_ok(xml::serialize_fersml(doc));
    CHECK(parsed.document->avatars[0].person.firstname == "A & B <tag> \"q\" 'a'");
    CHECK(parsed.document->avatars[0].person.lastname == "x&#amp;");
}

TEST_CASE("standard and numeric entities are decoded") {
    std::string bytes = sample_bytes();
    const auto pos = bytes.find("Firstname");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 9, "&#65;&amp;&lt;&gt;&quot;&apos;&#x42;");
    const auto parsed = parse_ok(bytes);
    CHECK(parsed.document->avatars[0].person.firstname == "A&<>\"'B");
}

TEST_CASE("single-quoted attribute values are accepted") {
    std::string bytes = sample_bytes();
    const auto pos = bytes.find("player_id=\"1\"");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 13, "player_id='1'");
    const auto parsed = parse_ok(bytes);
    CHECK(*parsed.document == testsupport::make_sample_document());
}

TEST_CASE("a UTF-8 byte-order mark is skipped") {
    const std::string bytes = "\xEF\xBB\xBF" + sample_bytes();
    const auto parsed = parse_ok(bytes);
    CHECK(*parsed.document == testsupport::make_sample_document());
}

TEST_CASE("comments and whitespace after the declaration are ignored") {
    std::string bytes = sample_bytes();
    const auto decl_end = bytes.find("?>");
    REQUIRE(decl_end != std::string::npos);
    bytes.insert(decl_end + 2, "\n<!-- preface -->\n\n<!-- another -->\n");
    CHECK(parse_ok(bytes).document->coach.starting_team.size() == 12);
}

TEST_CASE("malformed input is rejected with positions") {
    SUBCASE("empty document") {
        const auto d = parse_one_diag("");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "empty document: expected a root element");
        CHECK(d.line == 1);
        CHECK(d.column == 1);
    }
    SUBCASE("whitespace only") {
        const auto d = parse_one_diag("   \n  ");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
    }
    SUBCASE("unclosed root tag") {
        const auto d = parse_one_diag("<fersml><coach>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message.find("missing end tag") != std::string::npos);
    }
    SUBCASE("mismatched end tag") {
        const auto d = parse_one_diag("<fersml></coach>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message.find("does not match") != std::string::npos);
    }
    SUBCASE("unknown entity") {
        const auto d = parse_one_diag("<fersml>&ext;</fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message.find("unknown entity &ext;") != std::string::npos);
    }
    SUBCASE("unterminated entity") {
        const auto d = parse_one_diag("<fersml>&amp</fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message.find("unterminated entity") != std::string::npos);
    }
    SUBCASE("DOCTYPE is rejected") {
        const auto d = parse_one_diag("<!DOCTYPE fersml><fersml></fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "DOCTYPE is not supported");
    }
    SUBCASE("processing instructions are rejected") {
        // An XML declaration is tolerated at the very start; a PI anywhere
        // else is not.
        const auto d = parse_one_diag("<!-- c --><?xml-stylesheet x?><fersml></fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "processing instructions are not supported");

        const auto d2 = parse_one_diag("<fersml><?php echo ?></fersml>");
        CHECK(d2.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d2.message == "processing instructions are not supported");
    }
    SUBCASE("CDATA is rejected") {
        const auto d = parse_one_diag("<fersml><![CDATA[x]]></fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "CDATA sections are not supported");
    }
    SUBCASE("duplicate attribute") {
        const auto d = parse_one_diag(
            "<fersml><coach><starting_team>"
            "<player player_id=\"1\" player_id=\"2\" squad_number=\"9\" />"
            "</starting_team></coach></fersml>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "duplicate attribute \"player_id\"");
    }
    SUBCASE("content after the root element") {
        const auto d = parse_one_diag(sample_bytes() + "<extra/>");
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "content after the root element");
    }
    SUBCASE("nesting depth is bounded") {
        std::string bytes;
        for (int i = 0; i < 70; ++i) bytes += "<a>";
        for (int i = 0; i < 70; ++i) bytes += "</a>";
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::malformed_xml);
        CHECK(d.message == "maximum element nesting depth exceeded");
    }
    SUBCASE("positions are 1-based line:column") {
        const auto d = parse_one_diag("<fersml>\n  <![CDATA[x]]></fersml>");
        CHECK(d.line == 2);
        CHECK(d.column == 3);
    }
}

TEST_CASE("the grammar is closed: unknown content is one diagnostic") {
    SUBCASE("wrong root element") {
        const auto d = parse_one_diag("<futbol></futbol>");
        CHECK(d.kind == xml::DiagnosticKind::unknown_element);
        CHECK(d.message == "root element must be <fersml>, found <futbol>");
    }
    SUBCASE("unknown child element") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("<skills>");
        REQUIRE(pos != std::string::npos);
        bytes.insert(pos, "<stamina>50</stamina>");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::unknown_element);
        CHECK(d.message == "element <stamina> is not part of the dialect");
    }
    SUBCASE("unknown attribute") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("player_id=\"1\"");
        REQUIRE(pos != std::string::npos);
        bytes.insert(pos, "captain=\"yes\" ");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::unknown_element);
        CHECK(d.message == "attribute \"captain\" is not allowed on <player>");
    }
    SUBCASE("stray text inside a container") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("<starting_team>");
        REQUIRE(pos != std::string::npos);
        bytes.insert(pos + 15, "oops");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::unknown_element);
        CHECK(d.message == "unexpected text content in <starting_team>");
    }
    SUBCASE("element nested inside a leaf") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("<age>");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("<age>35</age>").size(), "<age><b>35</b></age>");
        const auto result = xml::parse_fersml(bytes);
        REQUIRE_FALSE(result.ok());
        REQUIRE_FALSE(result.diagnostics.empty());
        CHECK(result.diagnostics[0].kind == xml::DiagnosticKind::unknown_element);
        CHECK(result.diagnostics[0].message == "element <b> is not allowed inside <age>");
    }
}

TEST_CASE("required structure is enforced with a single diagnostic per parent") {
    SUBCASE("missing required element") {
        // An empty root reports the first missing child and nothing else.
        const auto d = parse_one_diag("<fersml></fersml>");
        CHECK(d.kind == xml::DiagnosticKind::missing_element);
        CHECK(d.message == "<fersml> is missing required element <coach>");
    }
    SUBCASE("a present element after a missing one reports the order, once") {
        // Deleting <coach> leaves the avatars in its expected slot.
        std::string bytes = sample_bytes();
        const auto start = bytes.find("<coach>");
        const auto stop = bytes.find("</coach>") + std::string("</coach>").size();
        REQUIRE(start != std::string::npos);
        bytes.erase(start, stop - start);
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::missing_element);
        CHECK(d.message ==
              "element <avatar> is not allowed here in <fersml>; expected <coach>");
    }
    SUBCASE("missing required attribute") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find(" squad_number=\"9\"");
        REQUIRE(pos != std::string::npos);
        bytes.erase(pos, std::string(" squad_number=\"9\"").size());
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::missing_element);
        CHECK(d.message == "<player> is missing required attribute \"squad_number\"");
    }
    SUBCASE("elements out of order: exactly one diagnostic, no cascade") {
        // Move <coach>...</coach> after <avatar>...</avatar>.
        std::string bytes = sample_bytes();
        const auto cstart = bytes.find("<coach>");
        const auto cstop = bytes.find("</coach>") + std::string("</coach>").size();
        REQUIRE(cstart != std::string::npos);
        const std::string coach = bytes.substr(cstart, cstop - cstart);
        bytes.erase(cstart, cstop - cstart);
        const auto astop = bytes.find("</avatar>") + std::string("</avatar>").size();
        REQUIRE(astop != std::string::npos);
        bytes.insert(astop, coach);
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::missing_element);
        CHECK(d.message ==
              "element <avatar> is not allowed here in <fersml>; expected <coach>");
    }
}

TEST_CASE("facet violations carry positions and exact bounds") {
    SUBCASE("attribute out of range") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("player_id=\"1\"");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("player_id=\"1\"").size(), "player_id=\"12\"");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d.message == "player_id 12 outside [1,11]");
    }
    SUBCASE("leaf value out of range") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("<football_sense>97</football_sense>");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("<football_sense>97</football_sense>").size(),
                      "<football_sense>0</football_sense>");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d.message == "football_sense 0 outside [1,100]");
    }
    SUBCASE("non-integer where an integer is required") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("<age>99</age>");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("<age>99</age>").size(), "<age>young</age>");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d.message.find("invalid integer \"young\"") != std::string::npos);
    }
    SUBCASE("enum violations name the offending token") {
        std::string bytes = sample_bytes();
        auto pos = bytes.find("<dominant_foot>both</dominant_foot>");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("<dominant_foot>both</dominant_foot>").size(),
                      "<dominant_foot>north</dominant_foot>");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d.message == "dominant_foot \"north\" is not one of both|left|right");

        std::string bytes2 = sample_bytes();
        pos = bytes2.find("attacking midfielder");
        REQUIRE(pos != std::string::npos);
        bytes2.replace(pos, std::string("attacking midfielder").size(), "goalie");
        const auto d2 = parse_one_diag(bytes2);
        CHECK(d2.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d2.message == "usual_position \"goalie\" is not a position token");
    }
    SUBCASE("the misspelled action names are the only accepted spellings") {
        std::string bytes = sample_bytes();
        const std::size_t n = bytes.size();
        // "shooting_goal" is NOT in the dialect; "shutting_goal" is.
        std::string wrong = bytes;
        std::size_t pos;
        while ((pos = wrong.find("shutting_goal")) != std::string::npos) {
            wrong.replace(pos, std::string("shutting_goal").size(), "shooting_goal");
        }
        REQUIRE(wrong.size() == n);
        const auto result = xml::parse_fersml(wrong);
        REQUIRE_FALSE(result.ok());
        CHECK(result.diagnostics[0].message.find("shooting_goal") != std::string::npos);
    }
    SUBCASE("semantic rules are reported at parse time with positions") {
        std::string bytes = sample_bytes();
        const auto pos = bytes.find("formation_name=\"4-3-3\"");
        REQUIRE(pos != std::string::npos);
        bytes.replace(pos, std::string("formation_name=\"4-3-3\"").size(),
                      "formation_name=\"4-4-2\"");
        const auto d = parse_one_diag(bytes);
        CHECK(d.kind == xml::DiagnosticKind::facet_violation);
        CHECK(d.message == "player_id 3 has more than one entry for formation \"4-4-2\"");
        CHECK(d.line > 1);
    }
}

TEST_CASE("prob-table entries are sorted ascending during binding") {
    // Bump the middle dist above the last one so the wire order is not
    // ascending; the binder sorts by dist, keeping each value with its entry.
    std::string bytes = sample_bytes();
    const auto p1 = bytes.find("dist=\"16\"");
    REQUIRE(p1 != std::string::npos);
    bytes.replace(p1, std::string("dist=\"16\"").size(), "dist=\"99\"");
    const auto parsed = parse_ok(bytes);
    const auto& entries =
        parsed.document->avatars[0].estimations.actions.shutting_goal->entries;
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].dist == doctest::Approx(5.0));
    CHECK(entries[1].dist == doctest::Approx(30.0));
    CHECK(entries[2].dist == doctest::Approx(99.0));
    CHECK(entries[0].prob == doctest::Approx(0.89));
    CHECK(entries[1].prob == doctest::Approx(0.47));
    CHECK(entries[2].prob == doctest::Approx(0.84));
}
