#pragma once

#include <utility>
#include <vector>

#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable {

// Pairs that block a matching, sorted lexicographically by
// (man name, woman name) so reports are deterministic.
struct BlockingReport {
    std::vector<std::pair<int, int>> pairs;

    bool empty() const { return pairs.empty(); }
};

// True iff every matched agent finds its partner acceptable.
bool is_individually_rational(const Market& market, const Matching& matching);

// All (m, w) where both strictly prefer each other to their current
// assignment. A single agent prefers any acceptable partner to staying
// single, and an agent matched to an unacceptable partner prefers any
// acceptable one.
BlockingReport blocking_pairs(const Market& market, const Matching& matching);

// blocking_pairs restricted to edges of the social graph.
BlockingReport social_blocking_pairs(const Market& market, const Matching& matching);

// Individually rational with no social blocking pair.
bool is_socially_stable(const Market& market, const Matching& matching);

// Individually rational with no blocking pair at all. Equivalent to social
// stability under the complete bipartite social graph.
bool is_stable(const Market& market, const Matching& matching);

// Number of matched pairs.
int cardinality(const Matching& matching);

bool is_individually_rational(const Instance& instance, const Matching& matching);
BlockingReport blocking_pairs(const Instance& instance, const Matching& matching);
BlockingReport social_blocking_pairs(const Instance& instance, const Matching& matching);
bool is_socially_stable(const Instance& instance, const Matching& matching);
bool is_stable(const Instance& instance, const Matching& matching);

} // namespace socstable
