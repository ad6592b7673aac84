#include "socstable/market.hpp"

#include <algorithm>

namespace socstable {

Market::Market(Instance instance) : instance_(std::move(instance)) {
    const int n_men = static_cast<int>(instance_.men.size());
    const int n_women = static_cast<int>(instance_.women.size());

    man_index_.reserve(n_men);
    for (int m = 0; m < n_men; ++m) man_index_.emplace(instance_.men[m], m);
    woman_index_.reserve(n_women);
    for (int w = 0; w < n_women; ++w) woman_index_.emplace(instance_.women[w], w);

    man_lists_.resize(n_men);
    man_ranks_.assign(n_men, std::vector<int>(n_women, -1));
    for (int m = 0; m < n_men; ++m) {
        for (const auto& name : instance_.man_prefs[m]) {
            const int w = woman_index_.at(name);
            man_ranks_[m][w] = static_cast<int>(man_lists_[m].size());
            man_lists_[m].push_back(w);
        }
    }
    woman_lists_.resize(n_women);
    woman_ranks_.assign(n_women, std::vector<int>(n_men, -1));
    for (int w = 0; w < n_women; ++w) {
        for (const auto& name : instance_.woman_prefs[w]) {
            const int m = man_index_.at(name);
            woman_ranks_[w][m] = static_cast<int>(woman_lists_[w].size());
            woman_lists_[w].push_back(m);
        }
    }

    social_.assign(static_cast<size_t>(n_men) * n_women, 0);
    social_edges_.reserve(instance_.social_edges.size());
    for (const auto& [man_name, woman_name] : instance_.social_edges) {
        const int m = man_index_.at(man_name);
        const int w = woman_index_.at(woman_name);
        social_[static_cast<size_t>(m) * n_women + w] = 1;
        social_edges_.emplace_back(m, w);
    }
    std::sort(social_edges_.begin(), social_edges_.end());
}

int Market::man_index(std::string_view name) const {
    auto it = man_index_.find(std::string(name));
    return it == man_index_.end() ? -1 : it->second;
}

int Market::woman_index(std::string_view name) const {
    auto it = woman_index_.find(std::string(name));
    return it == woman_index_.end() ? -1 : it->second;
}

} // namespace socstable
