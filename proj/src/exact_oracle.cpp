#include "socstable/exact_oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "socstable/stability.hpp"

namespace socstable {

namespace {

void check_limit(const Market& market, int limit) {
    const int agents = market.man_count() + market.woman_count();
    if (agents > limit)
        throw Error(Errc::InstanceTooLarge, std::to_string(agents) + " agents exceeds limit " +
                                                std::to_string(limit));
}

// Sorted-by-name pair list used for deterministic tie-breaks.
std::vector<std::pair<std::string, std::string>> name_pairs(const Market& market,
                                                            const std::vector<int>& man_partner) {
    std::vector<std::pair<std::string, std::string>> named;
    for (int m = 0; m < market.man_count(); ++m)
        if (man_partner[m] >= 0)
            named.emplace_back(market.man_name(m), market.woman_name(man_partner[m]));
    std::sort(named.begin(), named.end());
    return named;
}

// Only social edges can block, so a leaf check is one pass over them. Leaves
// are individually rational by construction (men branch over mutually
// acceptable women only).
bool leaf_socially_stable(const Market& market, const std::vector<int>& man_partner,
                          const std::vector<int>& woman_partner) {
    for (const auto& [m, w] : market.social_edges()) {
        if (man_partner[m] == w) continue;
        const int mr = market.man_rank(m, w);
        if (mr < 0) continue;
        if (man_partner[m] >= 0 && market.man_rank(m, man_partner[m]) <= mr) continue;
        const int wr = market.woman_rank(w, m);
        if (wr < 0) continue;
        if (woman_partner[w] >= 0 && market.woman_rank(w, woman_partner[w]) <= wr) continue;
        return false; // blocking social edge
    }
    return true;
}

struct Search {
    const Market& market;
    std::vector<int> man_partner;
    std::vector<int> woman_partner;
    int pairs = 0;

    // exact_max state
    int best_size = -1;
    std::vector<int> best;
    std::vector<std::pair<std::string, std::string>> best_names;

    // enumeration state
    std::vector<Matching>* sink = nullptr;

    explicit Search(const Market& m)
        : market(m), man_partner(m.man_count(), -1), woman_partner(m.woman_count(), -1),
          best(m.man_count(), -1) {}

    // How many of the men from `from` on could still match: those with at
    // least one mutually acceptable woman currently free.
    int matchable_from(int from) const {
        int count = 0;
        for (int m = from; m < market.man_count(); ++m) {
            for (int w : market.man_list(m)) {
                if (woman_partner[w] < 0 && market.woman_rank(w, m) >= 0) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

    void leaf() {
        if (!leaf_socially_stable(market, man_partner, woman_partner)) return;
        if (sink) {
            std::vector<std::pair<int, int>> pair_list;
            for (int m = 0; m < market.man_count(); ++m)
                if (man_partner[m] >= 0) pair_list.emplace_back(m, man_partner[m]);
            sink->push_back(Matching(std::move(pair_list)));
            return;
        }
        if (pairs < best_size) return;
        auto names = name_pairs(market, man_partner);
        if (pairs > best_size || names < best_names) {
            best_size = pairs;
            best = man_partner;
            best_names = std::move(names);
        }
    }

    void branch(int m) {
        if (!sink && pairs + matchable_from(m) < best_size) return; // cannot reach a maximum
        if (m == market.man_count()) {
            leaf();
            return;
        }
        for (int w : market.man_list(m)) {
            if (woman_partner[w] >= 0 || market.woman_rank(w, m) < 0) continue;
            man_partner[m] = w;
            woman_partner[w] = m;
            ++pairs;
            branch(m + 1);
            --pairs;
            woman_partner[w] = -1;
            man_partner[m] = -1;
        }
        branch(m + 1); // leave m single
    }
};

} // namespace

Matching exact_max_socially_stable(const Market& market, int limit) {
    check_limit(market, limit);
    Search search(market);
    search.branch(0);
    // A stable matching always exists and is socially stable, so the search
    // always finds a candidate.
    std::vector<std::pair<int, int>> pair_list;
    for (int m = 0; m < market.man_count(); ++m)
        if (search.best[m] >= 0) pair_list.emplace_back(m, search.best[m]);
    return Matching(std::move(pair_list));
}

Matching exact_max_socially_stable(const Instance& instance, int limit) {
    return exact_max_socially_stable(Market(instance), limit);
}

std::vector<Matching> enumerate_socially_stable(const Market& market, int limit) {
    check_limit(market, limit);
    std::vector<Matching> found;
    Search search(market);
    search.sink = &found;
    search.branch(0);
    std::sort(found.begin(), found.end(), [&](const Matching& a, const Matching& b) {
        if (a.pair_count() != b.pair_count()) return a.pair_count() < b.pair_count();
        return name_pairs(market, man_partners(market, a)) <
               name_pairs(market, man_partners(market, b));
    });
    return found;
}

std::vector<Matching> enumerate_socially_stable(const Instance& instance, int limit) {
    return enumerate_socially_stable(Market(instance), limit);
}

} // namespace socstable
