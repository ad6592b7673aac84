#include "socstable/instance.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace socstable {

namespace {

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (unsigned char c : name) {
        if (std::isspace(c) || c == ':') return false;
    }
    return true;
}

std::unordered_map<std::string, int> index_by_name(const std::vector<std::string>& names,
                                                   const char* side_label) {
    std::unordered_map<std::string, int> index;
    index.reserve(names.size());
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (!valid_name(names[i]))
            throw Error(Errc::InvalidName, "bad " + std::string(side_label) + " name '" + names[i] + "'");
        if (!index.emplace(names[i], i).second)
            throw Error(Errc::DuplicateAgent, std::string(side_label) + " '" + names[i] + "' declared twice");
    }
    return index;
}

void check_prefs(std::vector<std::vector<std::string>>& prefs, size_t owner_count,
                 const std::vector<std::string>& owners,
                 const std::unordered_map<std::string, int>& partners) {
    if (prefs.size() > owner_count)
        throw Error(Errc::UnknownAgentInPref, "more preference lists than agents");
    prefs.resize(owner_count);
    for (size_t i = 0; i < owner_count; ++i) {
        std::unordered_set<std::string> seen;
        for (const auto& entry : prefs[i]) {
            if (!partners.count(entry))
                throw Error(Errc::UnknownAgentInPref,
                            "'" + entry + "' in list of '" + owners[i] + "' is not an agent");
            if (!seen.insert(entry).second)
                throw Error(Errc::DuplicateInPref,
                            "'" + entry + "' appears twice in list of '" + owners[i] + "'");
        }
    }
}

} // namespace

bool Instance::operator==(const Instance& other) const {
    if (men != other.men || women != other.women) return false;
    if (man_prefs != other.man_prefs || woman_prefs != other.woman_prefs) return false;
    auto sorted_edges = [](const Instance& inst) {
        auto edges = inst.social_edges;
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    return sorted_edges(*this) == sorted_edges(other);
}

Instance validate_instance(Instance raw) {
    auto man_index = index_by_name(raw.men, "man");
    auto woman_index = index_by_name(raw.women, "woman");

    check_prefs(raw.man_prefs, raw.men.size(), raw.men, woman_index);
    check_prefs(raw.woman_prefs, raw.women.size(), raw.women, man_index);

    std::vector<std::pair<std::string, std::string>> edges;
    std::unordered_set<std::string> seen_edges;
    for (const auto& [a, b] : raw.social_edges) {
        std::string man, woman;
        if (man_index.count(a) && woman_index.count(b)) {
            man = a;
            woman = b;
        } else if (man_index.count(b) && woman_index.count(a)) {
            man = b;
            woman = a;
        } else if (man_index.count(a) || man_index.count(b)) {
            throw Error(Errc::SelfSideEdge, "edge (" + a + ", " + b + ") joins two men");
        } else if (woman_index.count(a) || woman_index.count(b)) {
            throw Error(Errc::SelfSideEdge, "edge (" + a + ", " + b + ") joins two women");
        } else {
            throw Error(Errc::UnknownAgentInEdge, "edge endpoint '" + a + "' is not an agent");
        }
        if (seen_edges.insert(man + ":" + woman).second) edges.emplace_back(man, woman);
    }
    raw.social_edges = std::move(edges);
    return raw;
}

std::optional<int> rank_of(const Instance& instance, const AgentId& owner,
                           const AgentId& candidate) {
    if (owner.side == candidate.side)
        throw Error(Errc::UnknownAgent,
                    "'" + owner.name + "' and '" + candidate.name + "' are on the same side");
    auto find = [](const std::vector<std::string>& names, const std::string& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) return -1;
        return static_cast<int>(it - names.begin());
    };
    const bool owner_is_man = owner.side == Side::Man;
    const int owner_idx = find(owner_is_man ? instance.men : instance.women, owner.name);
    if (owner_idx < 0) throw Error(Errc::UnknownAgent, "'" + owner.name + "' is not an agent");
    const int cand_idx =
        find(owner_is_man ? instance.women : instance.men, candidate.name);
    if (cand_idx < 0) throw Error(Errc::UnknownAgent, "'" + candidate.name + "' is not an agent");

    const auto& list = owner_is_man ? instance.man_prefs[owner_idx] : instance.woman_prefs[owner_idx];
    auto it = std::find(list.begin(), list.end(), candidate.name);
    if (it == list.end()) return std::nullopt;
    return static_cast<int>(it - list.begin());
}

} // namespace socstable
