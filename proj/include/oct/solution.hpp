#pragma once

#include <vector>

#include "oct/structure.hpp"
#include "oct/weights.hpp"

namespace oct {

// A vertex set inducing a bipartite subgraph, its exact weight, a
// two-coloring certificate, and the pairwise non-touching connected parts
// whose disjoint union it is (blob parts for the solver, connected
// components for the brute-force oracle).
struct Solution {
    VertexSet vertices;
    Rational weight;
    Bipartition certificate;
    std::vector<VertexSet> parts;
};

}  // namespace oct
