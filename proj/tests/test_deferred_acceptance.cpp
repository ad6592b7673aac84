#include <doctest.h>

#include "helpers.hpp"
#include "socstable/altered_preferences.hpp"
#include "socstable/deferred_acceptance.hpp"
#include "socstable/generators.hpp"
#include "socstable/stability.hpp"

using namespace socstable;
using socstable::test::make_matching;

namespace {

// Instance with the women's lists replaced by a supplied order; running the
// classical stability check there is an independent confirmation that DA
// output is stable with respect to that order.
Instance with_woman_order(const Market& market, const WomanOrder& order) {
    Instance inst = market.instance();
    for (int w = 0; w < market.woman_count(); ++w) {
        inst.woman_prefs[w].clear();
        for (int m : order.ranked_men[w]) inst.woman_prefs[w].push_back(market.man_name(m));
    }
    return validate_instance(std::move(inst));
}

} // namespace

TEST_SUITE("deferred_acceptance") {

TEST_CASE("fig1 under true orders gives the unique stable matching") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    const Market market(fig1);
    const DaResult result = man_proposing_da(market, true_woman_order(market));
    CHECK(result.matching == make_matching(market, {{"m1", "w2"}}));
    CHECK(is_stable(market, result.matching));
    CHECK(assert_da_properties(result.trace, result.matching, market));
}

TEST_CASE("fig1 under the altered orders matches everyone") {
    const Instance fig1 = fixture(FixtureName::Fig1).instance;
    const Market market(fig1);
    const AlteredPreferences prefs(market);
    const WomanOrder order = prefs.woman_order();
    const DaResult result = man_proposing_da(market, order);
    CHECK(result.matching == make_matching(market, {{"m1", "w1"}, {"m2", "w2"}}));
    // Independent confirmation: stable in the market whose women rank by the
    // altered orders.
    const Instance altered = with_woman_order(market, order);
    CHECK(is_stable(Market(altered), result.matching));
}

TEST_CASE("single mutually acceptable pair is matched") {
    Instance inst;
    inst.men = {"a"};
    inst.women = {"b"};
    inst.man_prefs = {{"b"}};
    inst.woman_prefs = {{"a"}};
    const Market market(validate_instance(inst));
    const DaResult result = man_proposing_da(market, true_woman_order(market));
    CHECK(result.matching == make_matching(market, {{"a", "b"}}));
    CHECK(result.trace.rounds == 1);
}

TEST_CASE("man with empty list stays single with zero proposals") {
    Instance inst;
    inst.men = {"a"};
    inst.women = {"b"};
    inst.man_prefs = {{}};
    inst.woman_prefs = {{"a"}};
    const Market market(validate_instance(std::move(inst)));
    const DaResult result = man_proposing_da(market, true_woman_order(market));
    CHECK(result.matching.empty());
    CHECK(result.trace.proposals.empty());
    CHECK(assert_da_properties(result.trace, result.matching, market));
}

TEST_CASE("tight fixture first run leaves m3 single after exhausting his list") {
    const Instance tight = fixture(FixtureName::Tight).instance;
    const Market market(tight);
    const AlteredPreferences prefs(market);
    const DaResult result = man_proposing_da(market, prefs.woman_order());
    CHECK(result.matching == make_matching(market, {{"m1", "w1"}, {"m2", "w3"}}));
    CHECK(assert_da_properties(result.trace, result.matching, market));
    // m3 proposed to his entire list {w3}.
    int m3_proposals = 0;
    for (const auto& event : result.trace.proposals)
        if (event.man == market.man_index("m3") && event.outcome != ProposalOutcome::Displaced)
            ++m3_proposals;
    CHECK(m3_proposals == 1);
}

TEST_CASE("outcome is independent of the proposer selection discipline") {
    test::for_each_random_instance([](const Instance& inst) {
        const Market market(inst);
        const WomanOrder true_order = true_woman_order(market);
        CHECK(man_proposing_da(market, true_order, ProposerSelection::FifoQueue).matching ==
              man_proposing_da(market, true_order, ProposerSelection::LifoStack).matching);
        const WomanOrder altered = AlteredPreferences(market).woman_order();
        CHECK(man_proposing_da(market, altered, ProposerSelection::FifoQueue).matching ==
              man_proposing_da(market, altered, ProposerSelection::LifoStack).matching);
    });
}

TEST_CASE("women never worsen within a run") {
    test::for_each_random_instance([](const Instance& inst) {
        const Market market(inst);
        const WomanOrder order = true_woman_order(market);
        const DaResult result = man_proposing_da(market, order);

        std::vector<std::vector<int>> rank(market.woman_count(),
                                           std::vector<int>(market.man_count(), -1));
        for (int w = 0; w < market.woman_count(); ++w)
            for (size_t i = 0; i < order.ranked_men[w].size(); ++i)
                rank[w][order.ranked_men[w][i]] = static_cast<int>(i);

        std::vector<int> held(market.woman_count(), -1);
        for (const auto& event : result.trace.proposals) {
            if (event.outcome != ProposalOutcome::Accepted) continue;
            if (held[event.woman] >= 0)
                CHECK(rank[event.woman][event.man] < rank[event.woman][held[event.woman]]);
            held[event.woman] = event.man;
        }
    });
}

TEST_CASE("output is individually rational under the true preferences") {
    test::for_each_random_instance([](const Instance& inst) {
        const Market market(inst);
        CHECK(is_individually_rational(
            market, man_proposing_da(market, true_woman_order(market)).matching));
        CHECK(is_individually_rational(
            market, man_proposing_da(market, AlteredPreferences(market).woman_order()).matching));
    });
}

TEST_CASE("each man's proposals walk his list without skips") {
    test::for_each_random_instance([](const Instance& inst) {
        const Market market(inst);
        const DaResult result = man_proposing_da(market, true_woman_order(market));
        std::vector<std::vector<int>> proposals(market.man_count());
        for (const auto& event : result.trace.proposals)
            if (event.outcome != ProposalOutcome::Displaced)
                proposals[event.man].push_back(event.woman);
        for (int m = 0; m < market.man_count(); ++m) {
            const auto list = market.man_list(m);
            REQUIRE(proposals[m].size() <= list.size());
            for (size_t i = 0; i < proposals[m].size(); ++i) CHECK(proposals[m][i] == list[i]);
        }
        CHECK(assert_da_properties(result.trace, result.matching, market));
    });
}

} // TEST_SUITE
