#include "socstable/generators.hpp"

#include <string>

#include "socstable/rng.hpp"

namespace socstable {

FixtureName fixture_from_string(std::string_view name) {
    if (name == "FIG1") return FixtureName::Fig1;
    if (name == "TIGHT") return FixtureName::Tight;
    if (name == "GADGET") return FixtureName::Gadget;
    if (name == "K3RED") return FixtureName::K3Red;
    throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

namespace {

Fixture fig1() {
    Instance inst;
    inst.men = {"m1", "m2"};
    inst.women = {"w1", "w2"};
    inst.man_prefs = {{"w2", "w1"}, {"w2", "w1"}};
    inst.woman_prefs = {{"m1"}, {"m1", "m2"}};
    inst.social_edges = {{"m1", "w1"}, {"m2", "w2"}};
    return {validate_instance(std::move(inst)), std::nullopt, std::nullopt};
}

Fixture tight() {
    Instance inst;
    inst.men = {"m1", "m2", "m3"};
    inst.women = {"w1", "w2", "w3"};
    inst.man_prefs = {{"w1", "w2"}, {"w1", "w3", "w2"}, {"w3"}};
    inst.woman_prefs = {{"m2", "m1"}, {"m1"}, {"m2", "m3"}};
    inst.social_edges = {{"m1", "w1"}, {"m3", "w3"}, {"m2", "w3"}};
    return {validate_instance(std::move(inst)), std::nullopt, std::nullopt};
}

Fixture from_graph(UndirectedGraph graph) {
    ReducedInstance reduced = reduce_is_to_socstable(graph);
    return {std::move(reduced.instance), std::move(reduced.map), std::move(graph)};
}

} // namespace

Fixture fixture(FixtureName name) {
    switch (name) {
    case FixtureName::Fig1: return fig1();
    case FixtureName::Tight: return tight();
    case FixtureName::Gadget: return from_graph(make_graph({"v1", "v2"}, {{"v1", "v2"}}));
    case FixtureName::K3Red:
        return from_graph(
            make_graph({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v1", "v3"}, {"v2", "v3"}}));
    }
    throw Error(Errc::UnknownFixture, "bad fixture enum value");
}

Instance gen_random(const GenConfig& config) {
    std::mt19937_64 rng(config.seed);
    const int n_men = config.n_men;
    const int n_women = config.n_women;

    Instance inst;
    for (int m = 0; m < n_men; ++m) inst.men.push_back("m" + std::to_string(m + 1));
    for (int w = 0; w < n_women; ++w) inst.women.push_back("w" + std::to_string(w + 1));

    // Pass 1: acceptability coins, row-major over (man, woman).
    std::vector<std::vector<char>> man_accepts(n_men, std::vector<char>(n_women, 0));
    std::vector<std::vector<char>> woman_accepts(n_men, std::vector<char>(n_women, 0));
    for (int m = 0; m < n_men; ++m) {
        for (int w = 0; w < n_women; ++w) {
            if (config.symmetric) {
                const bool both = unit_draw(rng) < config.p_accept;
                man_accepts[m][w] = woman_accepts[m][w] = both;
            } else {
                man_accepts[m][w] = unit_draw(rng) < config.p_accept;
                woman_accepts[m][w] = unit_draw(rng) < config.p_accept;
            }
        }
    }

    // Pass 2 and 3: each agent's accepted partners, shuffled into a list.
    for (int m = 0; m < n_men; ++m) {
        std::vector<std::string> list;
        for (int w = 0; w < n_women; ++w)
            if (man_accepts[m][w]) list.push_back(inst.women[w]);
        shuffle_draws(list, rng);
        inst.man_prefs.push_back(std::move(list));
    }
    for (int w = 0; w < n_women; ++w) {
        std::vector<std::string> list;
        for (int m = 0; m < n_men; ++m)
            if (woman_accepts[m][w]) list.push_back(inst.men[m]);
        shuffle_draws(list, rng);
        inst.woman_prefs.push_back(std::move(list));
    }

    // Pass 4: social edges, row-major, independent of acceptability.
    for (int m = 0; m < n_men; ++m)
        for (int w = 0; w < n_women; ++w)
            if (unit_draw(rng) < config.p_social)
                inst.social_edges.emplace_back(inst.men[m], inst.women[w]);

    return validate_instance(std::move(inst));
}

UndirectedGraph gen_random_graph(int n, double p_edge, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v + 1));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p_edge) edges.emplace_back(vertices[i], vertices[j]);
    return make_graph(std::move(vertices), edges);
}

} // namespace socstable
