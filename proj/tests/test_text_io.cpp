#include <doctest.h>

#include "helpers.hpp"
#include "socstable/generators.hpp"
#include "socstable/text_io.hpp"

using namespace socstable;
using socstable::test::make_matching;
using socstable::test::thrown_code;

TEST_SUITE("text_io") {

TEST_CASE("fig1 serializes to the canonical form") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    const std::string expected = "men m1 m2\n"
                                 "women w1 w2\n"
                                 "pref m1 : w2 w1\n"
                                 "pref m2 : w2 w1\n"
                                 "pref w1 : m1\n"
                                 "pref w2 : m1 m2\n"
                                 "edge m1 w1\n"
                                 "edge m2 w2\n";
    CHECK(serialize_instance(fig1) == expected);
    CHECK(parse_instance(expected) == fig1);
}

TEST_CASE("comments, blank lines and reversed edges are tolerated") {
    const Instance parsed = parse_instance("# a market\n"
                                           "men m1\n"
                                           "\n"
                                           "women w1  # one woman\n"
                                           "pref m1 : w1\n"
                                           "pref w1 : m1\n"
                                           "edge w1 m1\n");
    CHECK(parsed.social_edges ==
          std::vector<std::pair<std::string, std::string>>{{"m1", "w1"}});
}

TEST_CASE("grammar violations carry line numbers") {
    CHECK(thrown_code([] { parse_instance("men m1\nmen m2\nwomen w1\n"); }) == Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("women w1\npref w1 : \nmen m1\n"); }) ==
          Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("men m1\nwomen w1\npref m1 w1\n"); }) ==
          Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("men m1\nwomen w1\nbogus m1\n"); }) == Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("men m1\nwomen w1\nedge m1\n"); }) == Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("women w1\n"); }) == Errc::ParseError);
    CHECK(thrown_code([] { parse_instance("men m1\nwomen w1\npref m2 : w1\n"); }) ==
          Errc::ParseError);
    CHECK(thrown_code([] {
              parse_instance("men m1\nwomen w1\npref m1 : w1\npref m1 : w1\n");
          }) == Errc::ParseError);
}

TEST_CASE("validation errors propagate from parsing") {
    CHECK(thrown_code([] { parse_instance("men m1\nwomen w1\npref m1 : w1 w1\n"); }) ==
          Errc::DuplicateInPref);
    CHECK(thrown_code([] { parse_instance("men m1 m2\nwomen w1\nedge m1 m2\n"); }) ==
          Errc::SelfSideEdge);
}

TEST_CASE("a dual-sided name gets the man's list first, then the woman's") {
    const Instance parsed = parse_instance("men x\n"
                                           "women x\n"
                                           "pref x : x\n"
                                           "pref x : x\n");
    CHECK(parsed.man_prefs == std::vector<std::vector<std::string>>{{"x"}});
    CHECK(parsed.woman_prefs == std::vector<std::vector<std::string>>{{"x"}});
    CHECK(parse_instance(serialize_instance(parsed)) == parsed);
}

TEST_CASE("matching round trip and canonical order") {
    const Market market(fixture(FixtureName::Fig1).instance);
    const Matching matching = make_matching(market, {{"m2", "w2"}, {"m1", "w1"}});
    const std::string text = serialize_matching(market, matching);
    CHECK(text == "match m1 w1\nmatch m2 w2\n");
    CHECK(parse_matching(text, market) == matching);
    CHECK(serialize_matching(market, make_matching(market, {{"m1", "w2"}})) == "match m1 w2\n");
    CHECK(serialize_matching(market, Matching{}).empty());
}

TEST_CASE("matching files are validated") {
    const Market market(fixture(FixtureName::Fig1).instance);
    CHECK(thrown_code([&] { parse_matching("match m9 w1\n", market); }) == Errc::UnknownAgent);
    CHECK(thrown_code([&] { parse_matching("match m1 w1\nmatch m1 w2\n", market); }) ==
          Errc::DuplicateAgent);
    CHECK(thrown_code([&] { parse_matching("match m1\n", market); }) == Errc::ParseError);
    CHECK(thrown_code([&] { parse_matching("pair m1 w1\n", market); }) == Errc::ParseError);
}

TEST_CASE("graph round trip") {
    const UndirectedGraph graph =
        make_graph({"v1", "v2", "v3"}, {{"v2", "v3"}, {"v1", "v2"}});
    const std::string text = serialize_graph(graph);
    CHECK(text == "vertex v1\nvertex v2\nvertex v3\nedge v1 v2\nedge v2 v3\n");
    const UndirectedGraph parsed = parse_graph(text);
    CHECK(parsed.vertices == graph.vertices);
    CHECK(parsed.edges == graph.edges);

    CHECK(thrown_code([] { parse_graph("vertex v1\nedge v1 v1\n"); }) == Errc::InvalidGraph);
    CHECK(thrown_code([] { parse_graph("nonsense\n"); }) == Errc::ParseError);
}

TEST_CASE("parse of serialize is the identity on random instances") {
    test::for_each_random_instance([](const Instance& inst) {
        const std::string text = serialize_instance(inst);
        CHECK(parse_instance(text) == inst);
        CHECK(serialize_instance(parse_instance(text)) == text);
    }, 3, 1);
}

} // TEST_SUITE
