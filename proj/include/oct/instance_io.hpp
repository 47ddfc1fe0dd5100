#pragma once

#include <string>
#include <string_view>

#include "oct/graph.hpp"
#include "oct/weights.hpp"

namespace oct {

struct Instance {
    Graph graph;
    Weights weights;
};

// Instance grammar, 1-indexed ids:
//   c <comment>            ignored
//   p oct <n> <m>          exactly once, before any e/w line
//   e <u> <v>              m edge lines (duplicates collapse)
//   w <v> <num>[/<den>]    optional; missing weights default to 1
// Throws ParseError with the offending 1-based line number.
Instance parse_instance(std::string_view text);

// Canonical form: header, sorted edge lines, then weight lines for the
// non-unit weights only. parse(serialize(g, w)) reproduces (g, w) exactly.
std::string serialize_instance(const Graph& g, const Weights& w);

}  // namespace oct
