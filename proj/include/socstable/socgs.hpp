#pragma once

#include <optional>
#include <vector>

#include "socstable/deferred_acceptance.hpp"
#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable {

// One deferred-acceptance run inside socGS: the man promoted before the run
// (nullopt for the initial run), the matching it produced, its proposal
// trace, and the women's orders it ran under.
struct SocGsIteration {
    std::optional<int> promoted_man;
    Matching matching;
    SolveTrace trace;
    WomanOrder order;
};

struct SocGsResult {
    Matching matching;
    std::vector<SocGsIteration> iterations;
    int da_run_count = 0; // == iterations.size(), at most man_count + 1
};

// The socGS approximation algorithm: run man-proposing deferred acceptance
// under the altered preferences, then repeatedly pick the lowest-index
// single man who has not had a second chance, promote him, and rerun.
// The output is socially stable and at least 2/3 the size of a maximum
// socially stable matching. Men whose own list is empty are flagged after
// the first run without a rerun; they can never match.
SocGsResult socgs(const Market& market);
SocGsResult socgs(const Instance& instance);

// The trivial 2-approximation: man-proposing deferred acceptance under the
// true preferences. The result is stable.
Matching stable_baseline(const Market& market);
Matching stable_baseline(const Instance& instance);

} // namespace socstable
