#pragma once

#include <cstdint>
#include <vector>

#include "oct/covering.hpp"
#include "oct/graph.hpp"
#include "oct/solution.hpp"
#include "oct/weights.hpp"

namespace oct {

// Auxiliary graph over the connected pieces of the covering family: one
// vertex per part, an edge when two parts touch (shared vertex or any edge
// between them), and each part weighted by the exact sum of its members.
struct BlobGraph {
    std::vector<VertexSet> parts;  // canonical order (size, then lex)
    Graph graph;                   // over part indices
    Weights lifted;                // lifted part weights
    std::vector<int> origin;       // part index -> first originating family index
};

// Connected components of every family member's induced subgraph,
// deduplicated, canonical order. `origin` (when given) receives the first
// originating family index per part.
std::vector<VertexSet> split_components(const CoveringFamily& family, const Graph& g,
                                        std::vector<int>* origin = nullptr);

// Do two vertex sets intersect or share an edge?
bool touches(const Graph& g, const VertexSet& a, const VertexSet& b);

BlobGraph build_blob(const Graph& g, const std::vector<VertexSet>& parts, const Weights& w);

struct SolveOptions {
    bool class_check = true;        // reject inputs that are not P5-free
    std::uint64_t blob_cap = 50000;  // refuse larger deduplicated blobs
};

struct SolveStats {
    std::uint64_t family_raw = 0;
    std::uint64_t family_dedup = 0;
    std::uint64_t blob_vertices = 0;
    std::uint64_t blob_edges = 0;
    std::uint64_t mwis_calls = 0;
    double wall_ms = 0.0;
    bool certified = false;  // class check ran and passed
};

// Full pipeline: drop non-positive-weight vertices, build the covering
// family, split it, build the blob graph, solve MWIS on it, and assemble
// the union of the chosen parts. Verification (bipartiteness, pairwise
// non-touching parts, exact weight identity) always runs. Throws
// ClassRejection (with witness) when the class check fails and
// SizeLimitError when the blob cap is exceeded. With class_check off the
// result is still a valid bipartite set, but optimality is only guaranteed
// for P5-free inputs. `blob_out`, when given, receives the blob graph.
Solution solve_oct(const Graph& g, const Weights& w, const SolveOptions& options = {},
                   SolveStats* stats = nullptr, BlobGraph* blob_out = nullptr);

}  // namespace oct
