#include "socstable/matching.hpp"

#include <algorithm>
#include <cassert>

#include "socstable/market.hpp"

namespace socstable {

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    for (size_t i = 1; i < pairs_.size(); ++i) {
        assert(pairs_[i - 1].first != pairs_[i].first && "man matched twice");
    }
}

int Matching::partner_of_man(int man) const {
    for (const auto& [m, w] : pairs_)
        if (m == man) return w;
    return -1;
}

int Matching::partner_of_woman(int woman) const {
    for (const auto& [m, w] : pairs_)
        if (w == woman) return m;
    return -1;
}

std::vector<int> man_partners(const Market& market, const Matching& matching) {
    std::vector<int> partner(market.man_count(), -1);
    for (const auto& [m, w] : matching.pairs()) partner[m] = w;
    return partner;
}

std::vector<int> woman_partners(const Market& market, const Matching& matching) {
    std::vector<int> partner(market.woman_count(), -1);
    for (const auto& [m, w] : matching.pairs()) partner[w] = m;
    return partner;
}

} // namespace socstable
