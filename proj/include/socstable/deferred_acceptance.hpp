#pragma once

#include <vector>

#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable {

// One strict order over each woman's acceptable men. The ranked set must
// equal the acceptable set of her true preference list; reordering is
// allowed, extending or shrinking is not.
struct WomanOrder {
    std::vector<std::vector<int>> ranked_men; // per woman, best first
};

// The women's true preference lists as a WomanOrder.
WomanOrder true_woman_order(const Market& market);

enum class ProposalOutcome {
    Accepted, // the woman took the proposer (possibly dropping someone)
    Rejected, // the woman kept her situation, or finds the proposer unacceptable
    Displaced, // not a proposal: the named man was dropped by the woman
};

struct ProposalEvent {
    int man;
    int woman;
    ProposalOutcome outcome;
};

// Event log of one deferred-acceptance run. `rounds` counts proposals made
// (Accepted + Rejected events). Each man's Accepted/Rejected events walk his
// list in order without skips.
struct SolveTrace {
    std::vector<ProposalEvent> proposals;
    int rounds = 0;
};

// Which pending man proposes next. The output matching is the same for every
// discipline; the trace differs.
enum class ProposerSelection { FifoQueue, LifoStack };

struct DaResult {
    Matching matching;
    SolveTrace trace;
};

// Man-proposing deferred acceptance under the men's true lists and the given
// women's orders. Produces the man-optimal matching stable with respect to
// those orders. A proposal to a woman whose order does not rank the man is
// recorded and immediately rejected.
DaResult man_proposing_da(const Market& market, const WomanOrder& order,
                          ProposerSelection selection = ProposerSelection::FifoQueue);

// Checks the two deferred-acceptance termination properties against a trace:
//  - a woman is single iff she received no proposal from a man she finds
//    acceptable under her true list;
//  - a single man proposed to his entire list, and a matched man proposed to
//    exactly the prefix of his list ending at his partner.
bool assert_da_properties(const SolveTrace& trace, const Matching& matching,
                          const Market& market);

} // namespace socstable
