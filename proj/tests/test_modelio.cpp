#include <doctest.h>

#include <string>

#include "cogmap/modelio.hpp"
#include "helpers.hpp"

using namespace cogmap;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ParseError& e) {
        return e;
    }
    throw std::logic_error("expected a ParseError");
}

} // namespace

TEST_CASE("a small document parses into a simple model") {
    const ModelDocument doc = parse_model("MODEL FCM\n"
                                          "CONCEPTS a b\n"
                                          "ROW a: 0 1\n"
                                          "ROW b: 1 0\n");
    CHECK(doc.kind == ModelKind::fcm);
    CHECK(doc.fcm().matrix.kind() == MatrixKind::positive);
    CHECK(doc.fcm().matrix.at(0, 1) == 1);

    const ModelDocument with_neg = parse_model("MODEL FCM\n"
                                               "CONCEPTS a b\n"
                                               "ROW b: -1 0\n"
                                               "ROW a: 0 1\n");
    CHECK(with_neg.fcm().matrix.kind() == MatrixKind::simple);
    CHECK(with_neg.fcm().matrix.at(1, 0) == -1);
}

TEST_CASE("bundled fixtures parse and expose the expected shapes") {
    const ModelDocument m = load_fixture("ch4_special_M");
    CHECK(m.kind == ModelKind::fcm);
    CHECK(m.fcm().matrix.kind() == MatrixKind::positive);
    CHECK(m.fcm().space().size() == 11);
    const std::size_t row = m.fcm().space().index("poor_economy");
    const std::vector<std::int64_t> expected{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t j = 0; j < 11; ++j) CHECK(m.fcm().matrix.at(row, j) == expected[j]);
    CHECK(!m.note.empty());

    const ModelDocument t = load_fixture("ch5_public_T");
    CHECK(t.kind == ModelKind::frm);
    CHECK(t.frm().domain().size() == 9);
    CHECK(t.frm().range().size() == 11);

    CHECK(load_fixture("ch7_stress_FLCM").kind == ModelKind::flcm);
    CHECK(load_fixture("ch6_experts_V").kind == ModelKind::fcrm);
    CHECK(fixture_ids().size() == 12);
    CHECK_THROWS_AS(load_fixture("nope"), UnknownFixtureError);
}

TEST_CASE("diagnostics carry line and column") {
    SUBCASE("wrong entry count names the row") {
        const ParseError e = capture("MODEL FCM\n"
                                     "CONCEPTS a b c\n"
                                     "ROW a: 0 1\n"
                                     "ROW b: 0 0 0\n"
                                     "ROW c: 0 0 0\n");
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("'a'") != std::string::npos);
        CHECK(std::string(e.what()).find("expected 3") != std::string::npos);
    }
    SUBCASE("unknown directive") {
        const ParseError e = capture("MODEL FCM\nNODES a b\n");
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("NODES") != std::string::npos);
    }
    SUBCASE("duplicate label") {
        const ParseError e = capture("MODEL FCM\nCONCEPTS a a\n");
        CHECK(e.line() == 2);
    }
    SUBCASE("missing row") {
        const ParseError e = capture("MODEL FCM\nCONCEPTS a b\nROW a: 0 0\n");
        CHECK(std::string(e.what()).find("no ROW for concept 'b'") != std::string::npos);
    }
    SUBCASE("non-integer entry with its column") {
        const ParseError e = capture("MODEL FCM\nCONCEPTS a b\nROW a: 0 x\nROW b: 0 0\n");
        CHECK(e.line() == 3);
        CHECK(e.column() == 10);
    }
    SUBCASE("nonzero diagonal without the override") {
        const ParseError e = capture("MODEL FCM\nCONCEPTS a b\nROW a: 1 0\nROW b: 0 0\n");
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("diagonal") != std::string::npos);
        CHECK_NOTHROW(parse_model("MODEL FCM\nALLOW_DIAGONAL\nCONCEPTS a b\n"
                                  "ROW a: 1 0\nROW b: 0 0\n"));
    }
    SUBCASE("linguistic kinds demand a chain") {
        const ParseError e = capture("MODEL FLCM\nCONCEPTS a b\n");
        CHECK(std::string(e.what()).find("CHAIN") != std::string::npos);
    }
    SUBCASE("terms must belong to the chain") {
        const ParseError e = capture("MODEL FLCM\nCHAIN 0 < low\nCONCEPTS a b\n"
                                     "ROW a: 0 high\nROW b: 0 0\n");
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("high") != std::string::npos);
    }
    SUBCASE("domain and range must not overlap") {
        const ParseError e = capture("MODEL FRM\nDOMAIN a b\nRANGE b c\n"
                                     "ROW a: 0 0\nROW b: 0 0\n");
        CHECK(std::string(e.what()).find("'b'") != std::string::npos);
    }
    SUBCASE("identification mismatch points at IDENTIFY") {
        const ParseError e = capture("MODEL FCRM\n"
                                     "BEGIN FCM\nCONCEPTS a b\nROW a: 0 0\nROW b: 0 0\nEND\n"
                                     "BEGIN FRM\nDOMAIN a x\nRANGE r\nROW a: 0\nROW x: 0\nEND\n"
                                     "IDENTIFY\n");
        CHECK(e.line() == 13);
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("serialization round-trips every fixture") {
    for (const std::string_view id : fixture_ids()) {
        CAPTURE(id);
        const ModelDocument doc = load_fixture(id);
        const std::string canonical = serialize_model(doc);
        const ModelDocument reparsed = parse_model(canonical);
        CHECK(doc.structurally_equal(reparsed));
        CHECK(serialize_model(reparsed) == canonical);
    }
}

TEST_CASE("canonical form leads with the chain") {
    const std::string canonical = serialize_model(load_fixture("ch7_stress_FLCM"));
    const std::size_t chain_pos = canonical.find("CHAIN");
    const std::size_t concepts_pos = canonical.find("CONCEPTS");
    REQUIRE(chain_pos != std::string::npos);
    REQUIRE(concepts_pos != std::string::npos);
    CHECK(chain_pos < concepts_pos);
}

TEST_CASE("combined entries survive the round trip") {
    std::vector<FcmModel> groups;
    for (const char* id : {"ch4_special_M", "ch4_caretaker_T", "ch4_ngo_N"}) {
        groups.push_back(load_fixture(id).fcm());
    }
    const FcmModel combined = combine_fcms(groups);
    const ModelDocument doc{ModelKind::fcm, combined, ""};
    const ModelDocument reparsed = parse_model(serialize_model(doc));
    CHECK(reparsed.fcm().matrix.kind() == MatrixKind::combined);
    CHECK(reparsed.fcm().matrix.entries() == combined.matrix.entries());

    // kind survives even when every entry happens to fit a narrower kind
    const std::vector<FcmModel> single{load_fixture("ch4_special_M").fcm()};
    const ModelDocument one{ModelKind::fcm, combine_fcms(single), ""};
    CHECK(parse_model(serialize_model(one)).fcm().matrix.kind() == MatrixKind::combined);
}

TEST_CASE("scenarios resolve against their model") {
    const ModelDocument m = load_fixture("ch4_special_M");

    SUBCASE("single crisp seed") {
        const Scenario s = parse_scenario("SCENARIO poverty\nON poor_economy\n", m);
        CHECK(s.name == "poverty");
        REQUIRE(s.assignments.size() == 1);
        CHECK(s.assignments.front().index == 9);
        CHECK(s.assignments.front().qualifier.empty());
    }
    SUBCASE("linguistic seed with operator and cap") {
        const ModelDocument flcm = load_fixture("ch7_stress_FLCM");
        const Scenario s = parse_scenario(
            "SCENARIO stigma\nSET P1=high\nOPERATOR max-max\nMAXITERS 50\n", flcm);
        REQUIRE(s.assignments.size() == 1);
        CHECK(s.assignments.front().term == "high");
        CHECK(s.op == CompositionOperator::max_max());
        CHECK(s.max_iters == 50);
    }
    SUBCASE("bimodel seeds carry qualifiers") {
        const ModelDocument v = load_fixture("ch6_experts_V");
        const Scenario s = parse_scenario(
            "SCENARIO joint\nON fcm:R1\nON frm.range:S1\n", v);
        REQUIRE(s.assignments.size() == 2);
        CHECK(s.assignments[0].qualifier == "fcm");
        CHECK(s.assignments[1].qualifier == "frm.range");
        CHECK_THROWS_AS(parse_scenario("SCENARIO bad\nON R1\n", v), ParseError);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nON nobody\n", m), ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nSET poor_economy=1\n", m), ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nON poor_economy\nOPERATOR max-min\n", m),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nON poor_economy\nMAXITERS 0\n", m),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\n", m), ParseError);
        CHECK_THROWS_AS(
            parse_scenario("SCENARIO x\nON poor_economy\nON poor_economy\n", m), ParseError);

        const ModelDocument t = load_fixture("ch5_public_T");
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nON D1\nON R6\n", t), ParseError);
        const ModelDocument flcm = load_fixture("ch7_stress_FLCM");
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nON P1\n", flcm), ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nSET P1=huge\n", flcm), ParseError);
        CHECK_THROWS_AS(parse_scenario("SCENARIO x\nSET P1=0\n", flcm), ParseError);
    }
}

TEST_CASE("relational scenarios pick their side from the label") {
    const ModelDocument t = load_fixture("ch5_public_T");
    const Scenario dom = parse_scenario("SCENARIO d\nON D1\n", t);
    CHECK(dom.assignments.front().qualifier == "frm.domain");
    const Scenario ran = parse_scenario("SCENARIO r\nON R6\n", t);
    CHECK(ran.assignments.front().qualifier == "frm.range");
    CHECK(ran.assignments.front().index == 5);
}
