#pragma once

#include "oct/graph.hpp"
#include "oct/weights.hpp"

namespace oct {

// A maximum-weight independent set together with its exact weight.
struct IsResult {
    VertexSet set;
    Rational weight;
};

// Exact maximum-weight independent set. Requires strictly positive weights
// on the queried universe. Among maximum-weight sets, returns the one whose
// ascending member list is lexicographically smallest. Reentrant; a single
// call is single-threaded.
IsResult mwis_exact(const Graph& g, const Weights& w);
IsResult mwis_exact_within(const Graph& g, const Weights& w, const VertexSet& universe);

// Exhaustive reference engine with the same tie-break; refuses more than 24
// vertices.
IsResult mwis_brute(const Graph& g, const Weights& w);
IsResult mwis_brute_within(const Graph& g, const Weights& w, const VertexSet& universe);

}  // namespace oct
