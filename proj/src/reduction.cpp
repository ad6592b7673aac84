#include "socstable/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace socstable {

bool UndirectedGraph::adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<int> UndirectedGraph::neighbors(int v) const {
    std::vector<int> result;
    for (const auto& [a, b] : edges) {
        if (a == v) result.push_back(b);
        if (b == v) result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    return result;
}

UndirectedGraph make_graph(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
    UndirectedGraph graph;
    std::unordered_map<std::string, int> index;
    for (const auto& name : vertices) {
        if (name.empty())
            throw Error(Errc::InvalidGraph, "empty vertex name");
        for (unsigned char c : name)
            if (std::isspace(c) || c == ':')
                throw Error(Errc::InvalidGraph, "bad vertex name '" + name + "'");
        if (!index.emplace(name, static_cast<int>(index.size())).second)
            throw Error(Errc::InvalidGraph, "vertex '" + name + "' declared twice");
    }
    graph.vertices = std::move(vertices);
    std::unordered_set<std::int64_t> seen;
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw Error(Errc::InvalidGraph, "edge endpoint '" + a + "' is not a vertex");
        if (ib == index.end())
            throw Error(Errc::InvalidGraph, "edge endpoint '" + b + "' is not a vertex");
        int u = ia->second, v = ib->second;
        if (u == v) throw Error(Errc::InvalidGraph, "self-loop at '" + a + "'");
        if (u > v) std::swap(u, v);
        if (seen.insert(static_cast<std::int64_t>(u) << 32 | v).second)
            graph.edges.emplace_back(u, v);
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

bool is_independent_set(const UndirectedGraph& graph, const std::vector<int>& subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (graph.adjacent(subset[i], subset[j])) return false;
    return true;
}

ReducedInstance reduce_is_to_socstable(const UndirectedGraph& graph) {
    const int n = graph.vertex_count();
    ReducedInstance reduced;
    Instance& inst = reduced.instance;
    auto& map = reduced.map.by_vertex;
    map.resize(n);

    auto primary_man = [&](int i) { return "m1_" + graph.vertices[i]; };
    auto secondary_man = [&](int i) { return "m2_" + graph.vertices[i]; };
    auto primary_woman = [&](int i) { return "w1_" + graph.vertices[i]; };
    auto secondary_woman = [&](int i) { return "w2_" + graph.vertices[i]; };

    for (int i = 0; i < n; ++i) {
        map[i] = {2 * i, 2 * i + 1, 2 * i, 2 * i + 1};
        inst.men.push_back(primary_man(i));
        inst.men.push_back(secondary_man(i));
        inst.women.push_back(primary_woman(i));
        inst.women.push_back(secondary_woman(i));
    }
    for (int i = 0; i < n; ++i) {
        const auto nbrs = graph.neighbors(i);

        std::vector<std::string> primary_man_list{secondary_woman(i)};
        for (int j : nbrs) primary_man_list.push_back(secondary_woman(j));
        primary_man_list.push_back(primary_woman(i));
        inst.man_prefs.push_back(std::move(primary_man_list));
        inst.man_prefs.push_back({secondary_woman(i)});

        inst.woman_prefs.push_back({primary_man(i)});
        std::vector<std::string> secondary_woman_list{primary_man(i)};
        for (int j : nbrs) secondary_woman_list.push_back(primary_man(j));
        secondary_woman_list.push_back(secondary_man(i));
        inst.woman_prefs.push_back(std::move(secondary_woman_list));

        for (int j : nbrs) inst.social_edges.emplace_back(primary_man(i), secondary_woman(j));
    }
    inst = validate_instance(std::move(inst));
    return reduced;
}

namespace {

// vertex index owning a primary man, or -1.
std::vector<int> primary_owner(const Market& market, const GadgetMap& map) {
    std::vector<int> owner(market.man_count(), -1);
    for (size_t i = 0; i < map.by_vertex.size(); ++i)
        owner[map.by_vertex[i].primary_man] = static_cast<int>(i);
    return owner;
}

} // namespace

Matching normalize_matching(const Market& market, const GadgetMap& map, Matching matching) {
    const int n = static_cast<int>(map.by_vertex.size());
    auto man_partner = man_partners(market, matching);
    auto woman_partner = woman_partners(market, matching);
    const auto owner = primary_owner(market, map);

    const int step_limit = 4 * n * n;
    int steps = 0;
    auto step = [&]() {
        if (++steps > step_limit)
            throw Error(Errc::NormalizationDiverged,
                        "no fixpoint within " + std::to_string(step_limit) +
                            " steps; input matching was not socially stable");
    };

    auto rematch = [&](int man, int woman) {
        const int old_man = woman_partner[woman];
        if (old_man >= 0) man_partner[old_man] = -1;
        const int old_woman = man_partner[man];
        if (old_woman >= 0) woman_partner[old_woman] = -1;
        man_partner[man] = woman;
        woman_partner[woman] = man;
    };

    // Phase 1: give every single primary man his own secondary woman. A
    // displaced primary man is picked up by a later pass.
    for (;;) {
        int vertex = -1;
        for (int i = 0; i < n; ++i) {
            if (man_partner[map.by_vertex[i].primary_man] < 0) {
                vertex = i;
                break;
            }
        }
        if (vertex < 0) break;
        step();
        rematch(map.by_vertex[vertex].primary_man, map.by_vertex[vertex].secondary_woman);
    }

    // Phase 2: swap cross dyads. A cross pair (primary man of i, secondary
    // woman of j) in a socially stable matching always comes with its mirror.
    for (;;) {
        int vi = -1, vj = -1;
        for (int i = 0; i < n && vi < 0; ++i) {
            const int partner = man_partner[map.by_vertex[i].primary_man];
            if (partner < 0) continue;
            for (int j = 0; j < n; ++j) {
                if (j != i && partner == map.by_vertex[j].secondary_woman) {
                    vi = i;
                    vj = j;
                    break;
                }
            }
        }
        if (vi < 0) break;
        step();
        if (man_partner[map.by_vertex[vj].primary_man] != map.by_vertex[vi].secondary_woman)
            throw Error(Errc::NormalizationDiverged,
                        "cross pair at '" + market.instance().men[map.by_vertex[vi].primary_man] +
                            "' has no mirror; input matching was not socially stable");
        rematch(map.by_vertex[vi].primary_man, map.by_vertex[vi].secondary_woman);
        rematch(map.by_vertex[vj].primary_man, map.by_vertex[vj].secondary_woman);
    }

    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < market.man_count(); ++m)
        if (man_partner[m] >= 0) pairs.emplace_back(m, man_partner[m]);
    return Matching(std::move(pairs));
}

std::vector<int> extract_independent_set(const Market& market, const GadgetMap& map,
                                         const Matching& matching) {
    const Matching normalized = normalize_matching(market, map, matching);
    const auto man_partner = man_partners(market, normalized);
    std::vector<int> subset;
    for (size_t i = 0; i < map.by_vertex.size(); ++i)
        if (man_partner[map.by_vertex[i].secondary_man] >= 0)
            subset.push_back(static_cast<int>(i));
    return subset;
}

Matching is_to_matching(const UndirectedGraph& graph, const GadgetMap& map,
                        const std::vector<int>& subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (graph.adjacent(subset[i], subset[j]))
                throw Error(Errc::NotIndependent, "'" + graph.vertices[subset[i]] + "' and '" +
                                                      graph.vertices[subset[j]] +
                                                      "' are adjacent");
    std::vector<char> in_subset(map.by_vertex.size(), 0);
    for (int v : subset) in_subset[v] = 1;

    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < map.by_vertex.size(); ++i) {
        const auto& gadget = map.by_vertex[i];
        if (in_subset[i]) {
            pairs.emplace_back(gadget.primary_man, gadget.primary_woman);
            pairs.emplace_back(gadget.secondary_man, gadget.secondary_woman);
        } else {
            pairs.emplace_back(gadget.primary_man, gadget.secondary_woman);
        }
    }
    return Matching(std::move(pairs));
}

std::vector<int> brute_force_max_is(const UndirectedGraph& graph, int limit) {
    const int n = graph.vertex_count();
    if (n > limit || n > 30)
        throw Error(Errc::GraphTooLarge,
                    std::to_string(n) + " vertices exceeds limit " +
                        std::to_string(std::min(limit, 30)));

    std::vector<std::uint32_t> adjacency(n, 0);
    for (const auto& [a, b] : graph.edges) {
        adjacency[a] |= std::uint32_t{1} << b;
        adjacency[b] |= std::uint32_t{1} << a;
    }

    auto names_of = [&](std::uint32_t mask) {
        std::vector<std::string> names;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint32_t{1} << v)) names.push_back(graph.vertices[v]);
        std::sort(names.begin(), names.end());
        return names;
    };

    std::uint32_t best_mask = 0;
    int best_size = 0;
    std::vector<std::string> best_names;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((mask & (std::uint32_t{1} << v)) && (adjacency[v] & mask)) independent = false;
        if (!independent) continue;
        const int size = std::popcount(mask);
        if (size < best_size) continue;
        auto names = names_of(mask);
        if (size > best_size || names < best_names) {
            best_mask = mask;
            best_size = size;
            best_names = std::move(names);
        }
    }

    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint32_t{1} << v)) subset.push_back(v);
    return subset;
}

} // namespace socstable
