#include "socstable/stability.hpp"

#include <algorithm>

namespace socstable {

namespace {

// Does `man` strictly prefer `woman` to his current assignment? Being single
// or matched to an unacceptable partner ranks below every acceptable woman.
bool man_prefers(const Market& market, int man, int woman, int current_woman) {
    const int r = market.man_rank(man, woman);
    if (r < 0) return false;
    if (current_woman < 0) return true;
    const int rc = market.man_rank(man, current_woman);
    return rc < 0 || r < rc;
}

bool woman_prefers(const Market& market, int woman, int man, int current_man) {
    const int r = market.woman_rank(woman, man);
    if (r < 0) return false;
    if (current_man < 0) return true;
    const int rc = market.woman_rank(woman, current_man);
    return rc < 0 || r < rc;
}

void sort_by_names(const Market& market, std::vector<std::pair<int, int>>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        const auto& am = market.man_name(a.first);
        const auto& bm = market.man_name(b.first);
        if (am != bm) return am < bm;
        return market.woman_name(a.second) < market.woman_name(b.second);
    });
}

} // namespace

bool is_individually_rational(const Market& market, const Matching& matching) {
    for (const auto& [m, w] : matching.pairs()) {
        if (market.man_rank(m, w) < 0 || market.woman_rank(w, m) < 0) return false;
    }
    return true;
}

BlockingReport blocking_pairs(const Market& market, const Matching& matching) {
    const auto man_partner = man_partners(market, matching);
    const auto woman_partner = woman_partners(market, matching);
    BlockingReport report;
    for (int m = 0; m < market.man_count(); ++m) {
        for (int w : market.man_list(m)) {
            if (man_prefers(market, m, w, man_partner[m]) &&
                woman_prefers(market, w, m, woman_partner[w]))
                report.pairs.emplace_back(m, w);
        }
    }
    sort_by_names(market, report.pairs);
    return report;
}

BlockingReport social_blocking_pairs(const Market& market, const Matching& matching) {
    const auto man_partner = man_partners(market, matching);
    const auto woman_partner = woman_partners(market, matching);
    BlockingReport report;
    for (const auto& [m, w] : market.social_edges()) {
        if (man_prefers(market, m, w, man_partner[m]) &&
            woman_prefers(market, w, m, woman_partner[w]))
            report.pairs.emplace_back(m, w);
    }
    sort_by_names(market, report.pairs);
    return report;
}

bool is_socially_stable(const Market& market, const Matching& matching) {
    return is_individually_rational(market, matching) &&
           social_blocking_pairs(market, matching).empty();
}

bool is_stable(const Market& market, const Matching& matching) {
    return is_individually_rational(market, matching) &&
           blocking_pairs(market, matching).empty();
}

int cardinality(const Matching& matching) { return matching.pair_count(); }

bool is_individually_rational(const Instance& instance, const Matching& matching) {
    return is_individually_rational(Market(instance), matching);
}
BlockingReport blocking_pairs(const Instance& instance, const Matching& matching) {
    return blocking_pairs(Market(instance), matching);
}
BlockingReport social_blocking_pairs(const Instance& instance, const Matching& matching) {
    return social_blocking_pairs(Market(instance), matching);
}
bool is_socially_stable(const Instance& instance, const Matching& matching) {
    return is_socially_stable(Market(instance), matching);
}
bool is_stable(const Instance& instance, const Matching& matching) {
    return is_stable(Market(instance), matching);
}

} // namespace socstable
