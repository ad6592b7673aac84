#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socstable/error.hpp"

namespace socstable {

enum class Side { Man, Woman };

// Agents are identified by (side, name); the same name may appear once on
// each side.
struct AgentId {
    Side side;
    std::string name;
};

// A matching market. Agent names are nonempty tokens without whitespace or
// ':'. Preference lists are strict; an agent absent from a list is
// unacceptable to its owner. Social edges join one man and one woman and are
// independent of the preferences: an edge between mutually unacceptable
// agents is legal (it can never block).
//
// All types in this library are value types, immutable after
// validate_instance; sharing a validated Instance across concurrent solver
// runs is safe.
struct Instance {
    std::vector<std::string> men;   // declaration order
    std::vector<std::string> women; // declaration order
    // Ranked partner names per agent, parallel to men/women. Missing tails
    // are treated as empty lists by validate_instance.
    std::vector<std::vector<std::string>> man_prefs;
    std::vector<std::vector<std::string>> woman_prefs;
    // Stored as declared; validate_instance normalizes each edge to
    // (man, woman) orientation and drops duplicates.
    std::vector<std::pair<std::string, std::string>> social_edges;

    // Order-sensitive on agents and lists, set-based on social edges.
    bool operator==(const Instance& other) const;
};

// Checks every Instance invariant and returns the instance with social edges
// normalized. Throws Error with one of: DuplicateAgent, UnknownAgentInPref,
// DuplicateInPref, SelfSideEdge, UnknownAgentInEdge, InvalidName.
// Idempotent: validating a validated instance returns it unchanged.
Instance validate_instance(Instance raw);

// 0-based position of candidate in owner's list, or nullopt if candidate is
// unacceptable to owner. Lower rank means strictly preferred. Throws
// Error(UnknownAgent) if either agent is missing from the instance or the
// two are not on opposite sides.
std::optional<int> rank_of(const Instance& instance, const AgentId& owner,
                           const AgentId& candidate);

} // namespace socstable
