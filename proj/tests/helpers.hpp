#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socstable/generators.hpp"
#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable::test {

// Runs `body` and reports the Errc it threw, or nullopt if it returned.
template <typename Fn>
std::optional<Errc> thrown_code(Fn&& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline Matching make_matching(const Market& market,
                              const std::vector<std::pair<std::string, std::string>>& names) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [man, woman] : names)
        pairs.emplace_back(market.man_index(man), market.woman_index(woman));
    return Matching(std::move(pairs));
}

inline std::vector<std::pair<std::string, std::string>> named_pairs(const Market& market,
                                                                    const Matching& matching) {
    std::vector<std::pair<std::string, std::string>> names;
    for (const auto& [m, w] : matching.pairs())
        names.emplace_back(market.man_name(m), market.woman_name(w));
    return names;
}

// Assorted matchings for exercising predicates: empty, greedy-by-list,
// and an arbitrary diagonal that ignores preferences entirely.
inline std::vector<Matching> some_matchings(const Market& market) {
    std::vector<Matching> result;
    result.emplace_back();

    std::vector<std::pair<int, int>> greedy;
    std::vector<char> taken(market.woman_count(), 0);
    for (int m = 0; m < market.man_count(); ++m) {
        for (int w : market.man_list(m)) {
            if (!taken[w]) {
                taken[w] = 1;
                greedy.emplace_back(m, w);
                break;
            }
        }
    }
    result.emplace_back(std::move(greedy));

    if (market.woman_count() > 0) {
        std::vector<std::pair<int, int>> diagonal;
        for (int m = 0; m < std::min(market.man_count(), market.woman_count()); ++m)
            diagonal.emplace_back(m, m);
        result.emplace_back(std::move(diagonal));
    }
    return result;
}

// Small seeded corpus shared by the property tests. The acceptance suite
// runs the full-size version of the same sweep.
inline void for_each_random_instance(const std::function<void(const Instance&)>& body,
                                     int max_side = 4, int seeds = 2) {
    for (double p_accept : {0.3, 0.7, 1.0}) {
        for (double p_social : {0.0, 0.3, 0.7, 1.0}) {
            for (int n_men = 1; n_men <= max_side; ++n_men) {
                for (int n_women = 1; n_women <= max_side; ++n_women) {
                    for (int seed = 1; seed <= seeds; ++seed) {
                        GenConfig config;
                        config.n_men = n_men;
                        config.n_women = n_women;
                        config.p_accept = p_accept;
                        config.p_social = p_social;
                        config.seed = static_cast<std::uint64_t>(seed) * 7919 + n_men * 131 +
                                      n_women * 17;
                        body(gen_random(config));
                    }
                }
            }
        }
    }
}

} // namespace socstable::test
