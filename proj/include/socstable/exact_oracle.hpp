#pragma once

#include <vector>

#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable {

// Guard for the exponential searches below: total agent count allowed.
inline constexpr int kDefaultOracleLimit = 16;

// Ground-truth maximum-cardinality socially stable matching, by exhaustive
// branch over the men with a cardinality bound for pruning. Among maximum
// matchings, the pair list that is lexicographically least by
// (man name, woman name) is returned. Throws Error(InstanceTooLarge) when
// men + women exceeds `limit`.
Matching exact_max_socially_stable(const Market& market, int limit = kDefaultOracleLimit);
Matching exact_max_socially_stable(const Instance& instance, int limit = kDefaultOracleLimit);

// Every socially stable matching of the instance, without duplicates, sorted
// by cardinality and then by name-lexicographic pair list.
std::vector<Matching> enumerate_socially_stable(const Market& market,
                                                int limit = kDefaultOracleLimit);
std::vector<Matching> enumerate_socially_stable(const Instance& instance,
                                                int limit = kDefaultOracleLimit);

} // namespace socstable
