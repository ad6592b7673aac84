#pragma once

#include <utility>
#include <vector>

namespace socstable {

class Market;

// A partial one-to-one assignment of men to women, stored as (man index,
// woman index) pairs sorted by man index. Agents not appearing in any pair
// are single.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }

    int partner_of_man(int man) const;     // -1 if single
    int partner_of_woman(int woman) const; // -1 if single

    bool operator==(const Matching& other) const { return pairs_ == other.pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;
};

// Partner-of-man array of length man_count; -1 for single men.
std::vector<int> man_partners(const Market& market, const Matching& matching);
// Partner-of-woman array of length woman_count; -1 for single women.
std::vector<int> woman_partners(const Market& market, const Matching& matching);

} // namespace socstable
