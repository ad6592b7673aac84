#include "socstable/deferred_acceptance.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace socstable {

WomanOrder true_woman_order(const Market& market) {
    WomanOrder order;
    order.ranked_men.resize(market.woman_count());
    for (int w = 0; w < market.woman_count(); ++w) {
        auto list = market.woman_list(w);
        order.ranked_men[w].assign(list.begin(), list.end());
    }
    return order;
}

namespace {

// rank_in_order[w][m], -1 when m is not ranked by w's supplied order.
std::vector<std::vector<int>> order_ranks(const Market& market, const WomanOrder& order) {
    assert(static_cast<int>(order.ranked_men.size()) == market.woman_count() &&
           "woman_order must cover every woman");
    std::vector<std::vector<int>> ranks(market.woman_count(),
                                        std::vector<int>(market.man_count(), -1));
    for (int w = 0; w < market.woman_count(); ++w) {
        for (size_t i = 0; i < order.ranked_men[w].size(); ++i)
            ranks[w][order.ranked_men[w][i]] = static_cast<int>(i);
    }
    return ranks;
}

} // namespace

DaResult man_proposing_da(const Market& market, const WomanOrder& order,
                          ProposerSelection selection) {
    const auto rank = order_ranks(market, order);
    const int n_men = market.man_count();

    std::vector<int> next(n_men, 0);
    std::vector<int> man_partner(n_men, -1);
    std::vector<int> woman_partner(market.woman_count(), -1);
    std::deque<int> pending;
    for (int m = 0; m < n_men; ++m) pending.push_back(m);

    SolveTrace trace;
    while (!pending.empty()) {
        int m;
        if (selection == ProposerSelection::FifoQueue) {
            m = pending.front();
            pending.pop_front();
        } else {
            m = pending.back();
            pending.pop_back();
        }
        const auto list = market.man_list(m);
        if (next[m] >= static_cast<int>(list.size())) continue; // exhausted, stays single

        const int w = list[next[m]++];
        ++trace.rounds;
        const int r = rank[w][m];
        if (r < 0) {
            trace.proposals.push_back({m, w, ProposalOutcome::Rejected});
            pending.push_back(m);
            continue;
        }
        const int current = woman_partner[w];
        if (current < 0) {
            trace.proposals.push_back({m, w, ProposalOutcome::Accepted});
            woman_partner[w] = m;
            man_partner[m] = w;
        } else if (r < rank[w][current]) {
            trace.proposals.push_back({m, w, ProposalOutcome::Accepted});
            trace.proposals.push_back({current, w, ProposalOutcome::Displaced});
            man_partner[current] = -1;
            pending.push_back(current);
            woman_partner[w] = m;
            man_partner[m] = w;
        } else {
            trace.proposals.push_back({m, w, ProposalOutcome::Rejected});
            pending.push_back(m);
        }
    }

    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < n_men; ++m)
        if (man_partner[m] >= 0) pairs.emplace_back(m, man_partner[m]);
    return {Matching(std::move(pairs)), std::move(trace)};
}

bool assert_da_properties(const SolveTrace& trace, const Matching& matching,
                          const Market& market) {
    const auto man_partner = man_partners(market, matching);
    const auto woman_partner = woman_partners(market, matching);

    std::vector<int> acceptable_received(market.woman_count(), 0);
    std::vector<std::vector<int>> proposed(market.man_count());
    for (const auto& event : trace.proposals) {
        if (event.outcome == ProposalOutcome::Displaced) continue;
        proposed[event.man].push_back(event.woman);
        if (market.woman_rank(event.woman, event.man) >= 0)
            ++acceptable_received[event.woman];
    }

    for (int w = 0; w < market.woman_count(); ++w) {
        const bool single = woman_partner[w] < 0;
        if (single != (acceptable_received[w] == 0)) return false;
    }
    for (int m = 0; m < market.man_count(); ++m) {
        const auto list = market.man_list(m);
        const auto& made = proposed[m];
        if (man_partner[m] < 0) {
            // Single men exhausted their list.
            if (!std::equal(made.begin(), made.end(), list.begin(), list.end())) return false;
        } else {
            // Matched men stopped exactly at their partner.
            if (made.empty() || made.back() != man_partner[m]) return false;
            if (made.size() > list.size() ||
                !std::equal(made.begin(), made.end(), list.begin(),
                            list.begin() + made.size()))
                return false;
        }
    }
    return true;
}

} // namespace socstable
