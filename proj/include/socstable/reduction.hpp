#pragma once

#include <string>
#include <utility>
#include <vector>

#include "socstable/market.hpp"
#include "socstable/matching.hpp"

namespace socstable {

// Simple undirected graph with named vertices. The vertex order is the
// enumeration the reduction depends on.
struct UndirectedGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges; // normalized (i < j), deduplicated

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    bool adjacent(int a, int b) const;
    std::vector<int> neighbors(int v) const; // ascending
};

// Builds and checks a graph from names. Throws Error(InvalidGraph) on
// duplicate or malformed vertex names, unknown edge endpoints, or self-loops.
UndirectedGraph make_graph(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

bool is_independent_set(const UndirectedGraph& graph, const std::vector<int>& subset);

// The four agents encoding one source vertex. The primary man ranks his own
// secondary woman first and his primary woman last; the secondary man and
// primary woman are one-entry satellites.
struct GadgetAgents {
    int primary_man;    // list: [own secondary woman, neighbors' secondary women, own primary woman]
    int secondary_man;  // list: [own secondary woman]
    int primary_woman;  // list: [own primary man]
    int secondary_woman; // list: [own primary man, neighbors' primary men, own secondary man]
};

struct GadgetMap {
    std::vector<GadgetAgents> by_vertex;
};

struct ReducedInstance {
    Instance instance;
    GadgetMap map;
};

// Encodes an Independent Set instance as a market: four agents per vertex,
// neighbor entries in ascending vertex order, and a social edge from each
// primary man to the secondary woman of every neighboring vertex. A maximum
// socially stable matching of the result has n + k pairs, where k is the size
// of a maximum independent set.
ReducedInstance reduce_is_to_socstable(const UndirectedGraph& graph);

// Rewrites a socially stable matching on a reduced instance into the
// canonical form: every primary man matched and no primary man matched to
// another vertex's secondary woman. Never decreases cardinality or breaks
// social stability. Throws Error(NormalizationDiverged) if the rewrite does
// not reach that form within 4n^2 steps, which signals that the input was
// not socially stable.
Matching normalize_matching(const Market& market, const GadgetMap& map, Matching matching);

// Vertices whose secondary man is matched after normalization: an
// independent set of size cardinality(normalized) - n.
std::vector<int> extract_independent_set(const Market& market, const GadgetMap& map,
                                         const Matching& matching);

// The canonical socially stable matching of size n + |subset| induced by an
// independent set. Throws Error(NotIndependent) if two subset vertices are
// adjacent.
Matching is_to_matching(const UndirectedGraph& graph, const GadgetMap& map,
                        const std::vector<int>& subset);

inline constexpr int kDefaultGraphLimit = 20;

// Maximum independent set by subset enumeration; among maximum sets the one
// with the name-lexicographically least sorted vertex list is returned.
// Throws Error(GraphTooLarge) beyond `limit` vertices.
std::vector<int> brute_force_max_is(const UndirectedGraph& graph, int limit = kDefaultGraphLimit);

} // namespace socstable
