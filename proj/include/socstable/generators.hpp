#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "socstable/instance.hpp"
#include "socstable/reduction.hpp"

namespace socstable {

// The worked examples used throughout the tests:
//  - Fig1: two men, two women; the unique stable matching has one pair while
//    a socially stable matching with two pairs exists.
//  - Tight: three men, three women; socGS returns two pairs against an
//    optimum of three, meeting its 2/3 bound exactly.
//  - Gadget / K3Red: the Independent Set encoding of a single edge and of a
//    triangle.
enum class FixtureName { Fig1, Tight, Gadget, K3Red };

// Accepts FIG1, TIGHT, GADGET, K3RED; throws Error(UnknownFixture) otherwise.
FixtureName fixture_from_string(std::string_view name);

struct Fixture {
    Instance instance;
    std::optional<GadgetMap> gadget;          // Gadget and K3Red only
    std::optional<UndirectedGraph> source_graph; // Gadget and K3Red only
};

Fixture fixture(FixtureName name);

struct GenConfig {
    int n_men = 0;
    int n_women = 0;
    double p_accept = 0.0; // probability a man-woman pair is mutually acceptable
    double p_social = 0.0; // probability a pair is a social edge, independent of the above
    std::uint64_t seed = 0;
    // When false, each side's acceptance of the other is drawn independently,
    // so one-sided acceptability can occur.
    bool symmetric = true;
};

// Seed-deterministic random market. Agents are named m1..mN and w1..wM; each
// agent's accepted partners are shuffled into a strict list. Draw order is
// documented in the README so goldens can be regenerated elsewhere.
Instance gen_random(const GenConfig& config);

// Seed-deterministic Erdos-Renyi-style graph on vertices v1..vn.
UndirectedGraph gen_random_graph(int n, double p_edge, std::uint64_t seed);

} // namespace socstable
