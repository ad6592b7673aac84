#pragma once

#include <span>
#include <vector>

#include "socstable/deferred_acceptance.hpp"
#include "socstable/market.hpp"

namespace socstable {

// Per-woman reordering of the true preference lists used by socGS. Each
// woman's list splits into a promoted prefix (initially her acceptable
// social neighbors) and a tail (everyone else); both halves keep her true
// relative order, and every prefix member outranks every tail member.
// Promoting a man moves him from each tail into the prefix at his true rank
// among the current prefix members. Promotion reorders acceptable men only;
// it never makes anyone acceptable or unacceptable.
class AlteredPreferences {
public:
    explicit AlteredPreferences(const Market& market);
    // The state keeps a pointer to the market; a temporary would dangle.
    explicit AlteredPreferences(Market&&) = delete;

    // Gives `man` his second chance: flags him and promotes him in the list
    // of every woman who finds him acceptable. Throws Error(AlreadyPromoted)
    // if the flag is already set.
    void promote(int man);

    bool given_second_chance(int man) const { return second_chance_[man]; }

    std::span<const int> promoted_prefix(int woman) const { return prefix_[woman]; }
    std::span<const int> tail(int woman) const { return tail_[woman]; }

    // The woman's full altered order: prefix followed by tail.
    std::vector<int> order_for(int woman) const;

    // Altered orders for all women, ready for man_proposing_da.
    WomanOrder woman_order() const;

private:
    const Market* market_;
    std::vector<std::vector<int>> prefix_;
    std::vector<std::vector<int>> tail_;
    std::vector<char> second_chance_;
};

} // namespace socstable
