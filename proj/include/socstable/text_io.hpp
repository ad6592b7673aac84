#pragma once

#include <string>
#include <string_view>

#include "socstable/market.hpp"
#include "socstable/matching.hpp"
#include "socstable/reduction.hpp"
#include "socstable/stability.hpp"

namespace socstable {

// Instance file grammar, line based; '#' starts a comment, blank lines are
// ignored:
//   men <name>+          once, before any pref/edge line
//   women <name>+        once, before any pref/edge line
//   pref <name> : <name>*   at most once per agent; omitted means empty list
//   edge <man> <woman>   repeatable
// A pref owner naming both a man and a woman resolves to whichever side has
// no list yet, man first. Throws Error(ParseError) with a line number for
// grammar violations; validation errors propagate from validate_instance.
Instance parse_instance(std::string_view text);

// Canonical form: men/women in declaration order, a pref line for every
// agent (men first), edges sorted by (man name, woman name). Parsing the
// result reproduces an equal instance.
std::string serialize_instance(const Instance& instance);

// Matching file grammar: `match <man> <woman>` lines, same comment rules.
Matching parse_matching(std::string_view text, const Market& market);

// `match <man> <woman>` lines sorted by (man name, woman name).
std::string serialize_matching(const Market& market, const Matching& matching);

// Graph file grammar: `vertex <name>` lines in enumeration order, then
// `edge <name> <name>` lines, same comment rules. Vertex order is
// significant.
UndirectedGraph parse_graph(std::string_view text);

// Vertices in enumeration order, edges sorted by endpoint indices.
std::string serialize_graph(const UndirectedGraph& graph);

// One `block <man> <woman>` line per blocking pair, report order.
std::string format_blocking_report(const Market& market, const BlockingReport& report);

} // namespace socstable
