#pragma once

#include <cstdint>
#include <vector>

#include "oct/graph.hpp"
#include "oct/structure.hpp"
#include "oct/weights.hpp"

namespace oct {

// How a family member came to be: an initial singleton, or the run of one
// seed with one extension set.
struct CandidateProvenance {
    enum class Kind { singleton, seeded };
    Kind kind = Kind::singleton;
    int singleton_vertex = -1;
    SeedDominator seed;  // seeded only
    VertexSet dprime;    // seeded only, size <= 3
};

// A vertex set (original ids) inducing a bipartite subgraph of the input
// graph; never empty.
struct CandidateSet {
    VertexSet members;
    CandidateProvenance provenance;
};

// Working state of one seed's run: the surviving vertices plus an audit
// trail of the three deletion rules. Seed vertices are never deleted.
struct ReducedState {
    const Graph* graph = nullptr;
    const Weights* weights = nullptr;
    SeedDominator seed;
    VertexSet alive;
    VertexSet deleted_common;     // common neighbors of the two seed sides
    VertexSet deleted_nonmodule;  // non-module components outside N[seed]
    VertexSet deleted_boundary;   // C* vertices with neighbors leaving C*
};

ReducedState make_reduced_state(const Graph& g, const Weights& w, const SeedDominator& seed);

// Deletes every alive vertex adjacent to both seed sides, in one batch
// (membership depends only on adjacency to the seed, which survives).
ReducedState reduce_common_neighbors(ReducedState state);

// Deletes every connected component of alive - N[seed] that is not a module
// of the alive graph, in one batch (a failing witness always sits inside
// N[seed], which this rule never touches).
ReducedState prune_nonmodule_components(ReducedState state);

// One candidate: close the neighborhood of seed + dprime, strip the C*
// vertices that still see the rest of the alive graph, then take maximum
// weight independent sets on the two opposite seed-side neighborhoods.
// dprime may be empty (the seed alone may already dominate its component).
// Deletions are local to the call; `state_after` exposes them when given.
CandidateSet candidate_for(ReducedState state, const VertexSet& dprime,
                           ReducedState* state_after = nullptr);

struct FamilyStats {
    std::uint64_t raw_candidates = 0;  // n singletons + one per (seed, dprime) pair
    std::uint64_t deduped = 0;
    std::uint64_t seed_edges = 0;
    std::uint64_t seed_p3s = 0;
    std::uint64_t mwis_calls = 0;  // engine invocations (after memoization)
};

// Deduplicated candidate collection in canonical order (size, then lex).
// Contains all singletons; every member induces a bipartite subgraph of g.
struct CoveringFamily {
    std::vector<CandidateSet> sets;
    FamilyStats stats;
};

// Runs every seed (canonical orientations from enumerate_seeds) against
// every dprime of size 0..3 drawn from the seed's reduced alive set.
// Throws std::logic_error if any candidate fails the bipartite invariant
// or the raw-count bound n + (#edges + #P3s) * (1 + n + C(n,2) + C(n,3)).
CoveringFamily build_covering_family(const Graph& g, const Weights& w);

// Same, over an explicit seed list (used to check that the family does not
// depend on seed orientation).
CoveringFamily build_covering_family_with_seeds(const Graph& g, const Weights& w,
                                                const std::vector<SeedDominator>& seeds);

}  // namespace oct
