#include "socstable/altered_preferences.hpp"

#include <algorithm>

namespace socstable {

AlteredPreferences::AlteredPreferences(const Market& market)
    : market_(&market),
      prefix_(market.woman_count()),
      tail_(market.woman_count()),
      second_chance_(market.man_count(), 0) {
    for (int w = 0; w < market.woman_count(); ++w) {
        for (int m : market.woman_list(w)) {
            (market.has_social_edge(m, w) ? prefix_[w] : tail_[w]).push_back(m);
        }
    }
}

void AlteredPreferences::promote(int man) {
    if (second_chance_[man])
        throw Error(Errc::AlreadyPromoted,
                    "'" + market_->man_name(man) + "' already had a second chance");
    second_chance_[man] = 1;
    for (int w = 0; w < market_->woman_count(); ++w) {
        const int rank = market_->woman_rank(w, man);
        if (rank < 0) continue; // she never ranks him; her list is untouched
        auto& prefix = prefix_[w];
        if (std::find(prefix.begin(), prefix.end(), man) != prefix.end()) continue;
        auto& tail = tail_[w];
        tail.erase(std::find(tail.begin(), tail.end(), man));
        auto pos = std::find_if(prefix.begin(), prefix.end(), [&](int other) {
            return market_->woman_rank(w, other) > rank;
        });
        prefix.insert(pos, man);
    }
}

std::vector<int> AlteredPreferences::order_for(int woman) const {
    std::vector<int> order = prefix_[woman];
    order.insert(order.end(), tail_[woman].begin(), tail_[woman].end());
    return order;
}

WomanOrder AlteredPreferences::woman_order() const {
    WomanOrder order;
    order.ranked_men.reserve(prefix_.size());
    for (int w = 0; w < static_cast<int>(prefix_.size()); ++w)
        order.ranked_men.push_back(order_for(w));
    return order;
}

} // namespace socstable
