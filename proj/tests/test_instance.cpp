#include <doctest.h>

#include "helpers.hpp"
#include "socstable/generators.hpp"
#include "socstable/instance.hpp"

using namespace socstable;
using socstable::test::thrown_code;

namespace {

Instance tiny_two_sided() {
    Instance inst;
    inst.men = {"m1", "m2"};
    inst.women = {"w1", "w2"};
    inst.man_prefs = {{"w1"}, {}};
    inst.woman_prefs = {{"m1"}, {}};
    return inst;
}

} // namespace

TEST_SUITE("instance") {

TEST_CASE("fig1 fixture validates") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    CHECK(validate_instance(fig1) == fig1);
}

TEST_CASE("validate is idempotent on random instances") {
    test::for_each_random_instance(
        [](const Instance& inst) { CHECK(validate_instance(inst) == inst); });
}

TEST_CASE("duplicate entry in a preference list") {
    Instance inst = tiny_two_sided();
    inst.man_prefs[0] = {"w1", "w1"};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::DuplicateInPref);
}

TEST_CASE("same-side social edge") {
    Instance inst = tiny_two_sided();
    inst.social_edges = {{"m1", "m2"}};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::SelfSideEdge);
}

TEST_CASE("duplicate agent name within a side") {
    Instance inst = tiny_two_sided();
    inst.men = {"m1", "m1"};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::DuplicateAgent);
}

TEST_CASE("unknown agent in a preference list") {
    Instance inst = tiny_two_sided();
    inst.man_prefs[0] = {"w9"};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::UnknownAgentInPref);
}

TEST_CASE("unknown agent in an edge") {
    Instance inst = tiny_two_sided();
    inst.social_edges = {{"zz", "qq"}};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::UnknownAgentInEdge);
}

TEST_CASE("names with whitespace or colon are rejected") {
    Instance inst = tiny_two_sided();
    inst.men = {"m1", "bad:name"};
    CHECK(thrown_code([&] { validate_instance(inst); }) == Errc::InvalidName);
}

TEST_CASE("edges are normalized to man-first orientation and deduplicated") {
    Instance inst = tiny_two_sided();
    inst.social_edges = {{"w1", "m2"}, {"m2", "w1"}};
    const Instance validated = validate_instance(inst);
    REQUIRE(validated.social_edges.size() == 1);
    CHECK(validated.social_edges[0] == std::pair<std::string, std::string>{"m2", "w1"});
}

TEST_CASE("cross-side duplicate names are allowed") {
    Instance inst;
    inst.men = {"x"};
    inst.women = {"x"};
    inst.man_prefs = {{"x"}};
    inst.woman_prefs = {{"x"}};
    CHECK_NOTHROW(validate_instance(inst));
}

TEST_CASE("rank_of on fig1") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    CHECK(rank_of(fig1, {Side::Man, "m1"}, {Side::Woman, "w2"}) == 0);
    CHECK(rank_of(fig1, {Side::Man, "m1"}, {Side::Woman, "w1"}) == 1);
    CHECK_FALSE(rank_of(fig1, {Side::Woman, "w1"}, {Side::Man, "m2"}).has_value());
    CHECK(rank_of(fig1, {Side::Woman, "w2"}, {Side::Man, "m1"}) == 0);
}

TEST_CASE("rank_of rejects unknown agents and same-side queries") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    CHECK(thrown_code([&] { rank_of(fig1, {Side::Man, "nobody"}, {Side::Woman, "w1"}); }) ==
          Errc::UnknownAgent);
    CHECK(thrown_code([&] { rank_of(fig1, {Side::Man, "m1"}, {Side::Man, "m2"}); }) ==
          Errc::UnknownAgent);
}

TEST_CASE("rank_of walks each list in order") {
    test::for_each_random_instance(
        [](const Instance& inst) {
            for (size_t m = 0; m < inst.men.size(); ++m) {
                const AgentId owner{Side::Man, inst.men[m]};
                for (size_t i = 0; i < inst.man_prefs[m].size(); ++i) {
                    auto r = rank_of(inst, owner, {Side::Woman, inst.man_prefs[m][i]});
                    REQUIRE(r.has_value());
                    CHECK(*r == static_cast<int>(i));
                }
            }
        },
        3, 1);
}

} // TEST_SUITE
