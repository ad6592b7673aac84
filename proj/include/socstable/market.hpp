#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "socstable/instance.hpp"

namespace socstable {

// Index-based read-only view over a validated Instance: agents become dense
// indices in declaration order, with O(1) rank and social-edge lookups.
// Owns a snapshot of the instance, so it stays valid regardless of the
// source object's lifetime.
class Market {
public:
    explicit Market(Instance instance);

    const Instance& instance() const { return instance_; }
    int man_count() const { return static_cast<int>(man_lists_.size()); }
    int woman_count() const { return static_cast<int>(woman_lists_.size()); }

    const std::string& man_name(int man) const { return instance_.men[man]; }
    const std::string& woman_name(int woman) const { return instance_.women[woman]; }
    int man_index(std::string_view name) const;   // -1 if absent
    int woman_index(std::string_view name) const; // -1 if absent

    // Acceptable partners in preference order.
    std::span<const int> man_list(int man) const { return man_lists_[man]; }
    std::span<const int> woman_list(int woman) const { return woman_lists_[woman]; }

    // Rank of a partner in an agent's list; -1 means unacceptable.
    int man_rank(int man, int woman) const { return man_ranks_[man][woman]; }
    int woman_rank(int woman, int man) const { return woman_ranks_[woman][man]; }

    bool has_social_edge(int man, int woman) const {
        return social_[static_cast<size_t>(man) * woman_lists_.size() + woman] != 0;
    }
    // Sorted by (man index, woman index).
    const std::vector<std::pair<int, int>>& social_edges() const { return social_edges_; }

private:
    Instance instance_;
    std::vector<std::vector<int>> man_lists_;
    std::vector<std::vector<int>> woman_lists_;
    std::vector<std::vector<int>> man_ranks_;
    std::vector<std::vector<int>> woman_ranks_;
    std::vector<char> social_;
    std::vector<std::pair<int, int>> social_edges_;
    std::unordered_map<std::string, int> man_index_;
    std::unordered_map<std::string, int> woman_index_;
};

} // namespace socstable
