#include "socstable/text_io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace socstable {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        start = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream stream{std::string(raw)};
        std::string token;
        while (stream >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

} // namespace

Instance parse_instance(std::string_view text) {
    Instance inst;
    bool saw_men = false, saw_women = false;
    std::unordered_map<std::string, int> man_index, woman_index;
    std::vector<bool> man_pref_set, woman_pref_set;

    for (const auto& line : tokenize(text)) {
        const auto& tokens = line.tokens;
        const std::string& directive = tokens[0];
        if (directive == "men") {
            if (saw_men) parse_fail(line.number, "second 'men' line");
            saw_men = true;
            for (size_t i = 1; i < tokens.size(); ++i) {
                man_index.emplace(tokens[i], static_cast<int>(inst.men.size()));
                inst.men.push_back(tokens[i]);
            }
            man_pref_set.assign(inst.men.size(), false);
            inst.man_prefs.resize(inst.men.size());
        } else if (directive == "women") {
            if (saw_women) parse_fail(line.number, "second 'women' line");
            saw_women = true;
            for (size_t i = 1; i < tokens.size(); ++i) {
                woman_index.emplace(tokens[i], static_cast<int>(inst.women.size()));
                inst.women.push_back(tokens[i]);
            }
            woman_pref_set.assign(inst.women.size(), false);
            inst.woman_prefs.resize(inst.women.size());
        } else if (directive == "pref") {
            if (!saw_men || !saw_women)
                parse_fail(line.number, "'pref' before 'men' and 'women'");
            if (tokens.size() < 3 || tokens[2] != ":")
                parse_fail(line.number, "expected 'pref <name> : <name>*'");
            const std::string& owner = tokens[1];
            std::vector<std::string> entries(tokens.begin() + 3, tokens.end());
            auto man = man_index.find(owner);
            auto woman = woman_index.find(owner);
            if (man != man_index.end() && !man_pref_set[man->second]) {
                man_pref_set[man->second] = true;
                inst.man_prefs[man->second] = std::move(entries);
            } else if (woman != woman_index.end() && !woman_pref_set[woman->second]) {
                woman_pref_set[woman->second] = true;
                inst.woman_prefs[woman->second] = std::move(entries);
            } else if (man != man_index.end() || woman != woman_index.end()) {
                parse_fail(line.number, "second pref list for '" + owner + "'");
            } else {
                parse_fail(line.number, "pref owner '" + owner + "' is not an agent");
            }
        } else if (directive == "edge") {
            if (!saw_men || !saw_women)
                parse_fail(line.number, "'edge' before 'men' and 'women'");
            if (tokens.size() != 3) parse_fail(line.number, "expected 'edge <man> <woman>'");
            inst.social_edges.emplace_back(tokens[1], tokens[2]);
        } else {
            parse_fail(line.number, "unknown directive '" + directive + "'");
        }
    }
    if (!saw_men) throw Error(Errc::ParseError, "missing 'men' line");
    if (!saw_women) throw Error(Errc::ParseError, "missing 'women' line");
    return validate_instance(std::move(inst));
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << "men";
    for (const auto& name : instance.men) out << ' ' << name;
    out << "\nwomen";
    for (const auto& name : instance.women) out << ' ' << name;
    out << '\n';
    auto write_prefs = [&](const std::vector<std::string>& owners,
                           const std::vector<std::vector<std::string>>& prefs) {
        for (size_t i = 0; i < owners.size(); ++i) {
            out << "pref " << owners[i] << " :";
            for (const auto& entry : prefs[i]) out << ' ' << entry;
            out << '\n';
        }
    };
    write_prefs(instance.men, instance.man_prefs);
    write_prefs(instance.women, instance.woman_prefs);
    auto edges = instance.social_edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [man, woman] : edges) out << "edge " << man << ' ' << woman << '\n';
    return std::move(out).str();
}

Matching parse_matching(std::string_view text, const Market& market) {
    std::vector<std::pair<int, int>> pairs;
    std::unordered_set<int> men_used, women_used;
    for (const auto& line : tokenize(text)) {
        const auto& tokens = line.tokens;
        if (tokens[0] != "match")
            parse_fail(line.number, "unknown directive '" + tokens[0] + "'");
        if (tokens.size() != 3) parse_fail(line.number, "expected 'match <man> <woman>'");
        const int m = market.man_index(tokens[1]);
        if (m < 0) throw Error(Errc::UnknownAgent, "'" + tokens[1] + "' is not a man");
        const int w = market.woman_index(tokens[2]);
        if (w < 0) throw Error(Errc::UnknownAgent, "'" + tokens[2] + "' is not a woman");
        if (!men_used.insert(m).second)
            throw Error(Errc::DuplicateAgent, "'" + tokens[1] + "' matched twice");
        if (!women_used.insert(w).second)
            throw Error(Errc::DuplicateAgent, "'" + tokens[2] + "' matched twice");
        pairs.emplace_back(m, w);
    }
    return Matching(std::move(pairs));
}

std::string serialize_matching(const Market& market, const Matching& matching) {
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& [m, w] : matching.pairs())
        named.emplace_back(market.man_name(m), market.woman_name(w));
    std::sort(named.begin(), named.end());
    std::ostringstream out;
    for (const auto& [man, woman] : named) out << "match " << man << ' ' << woman << '\n';
    return std::move(out).str();
}

UndirectedGraph parse_graph(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& line : tokenize(text)) {
        const auto& tokens = line.tokens;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 2) parse_fail(line.number, "expected 'vertex <name>'");
            vertices.push_back(tokens[1]);
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3) parse_fail(line.number, "expected 'edge <name> <name>'");
            edges.emplace_back(tokens[1], tokens[2]);
        } else {
            parse_fail(line.number, "unknown directive '" + tokens[0] + "'");
        }
    }
    return make_graph(std::move(vertices), edges);
}

std::string serialize_graph(const UndirectedGraph& graph) {
    std::ostringstream out;
    for (const auto& name : graph.vertices) out << "vertex " << name << '\n';
    for (const auto& [a, b] : graph.edges)
        out << "edge " << graph.vertices[a] << ' ' << graph.vertices[b] << '\n';
    return std::move(out).str();
}

std::string format_blocking_report(const Market& market, const BlockingReport& report) {
    std::ostringstream out;
    for (const auto& [m, w] : report.pairs)
        out << "block " << market.man_name(m) << ' ' << market.woman_name(w) << '\n';
    return std::move(out).str();
}

} // namespace socstable
