#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oct/graph.hpp"

namespace oct {

// Two-coloring witness: left and right are independent and disjoint. For a
// connected graph the split is unique up to swapping sides; we canonicalize
// by putting each component's minimum-id vertex on the left.
struct Bipartition {
    VertexSet left;
    VertexSet right;
};

// An edge or induced P3 together with its fixed bipartition; one such seed
// drives one outer round of the covering construction. Canonical
// orientation: the part containing the minimum vertex id is `left`.
struct SeedDominator {
    VertexSet vertices;  // size 2 or 3
    Bipartition parts;
};

inline SeedDominator swap_orientation(SeedDominator s) {
    std::swap(s.parts.left, s.parts.right);
    return s;
}

// Witness that a set is not a module: u lies outside the set and is
// adjacent to x but not to y.
struct ModuleWitness {
    int x = -1;
    int y = -1;
    int u = -1;
};

std::optional<Bipartition> bipartition_of(const Graph& g);
// Bipartition of the alive-induced subgraph, in original ids.
std::optional<Bipartition> bipartition_within(const Graph& g, const VertexSet& alive);

// An odd cycle (vertex list, odd length, consecutive members adjacent,
// first adjacent to last), present exactly when the graph is not bipartite.
std::optional<std::vector<int>> find_odd_cycle_within(const Graph& g, const VertexSet& alive);

// First induced path on five vertices in scan order, or absent.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);

bool is_module(const Graph& g, const VertexSet& a, ModuleWitness* witness = nullptr);
bool is_module_within(const Graph& g, const VertexSet& a, const VertexSet& alive,
                      ModuleWitness* witness = nullptr);

// target ⊆ N[d]?
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& target);

// Every edge and every induced P3, one canonical orientation each. Edges
// come first in (u,v) order, then P3s in (middle, endpoints) order.
std::vector<SeedDominator> enumerate_seeds(const Graph& g);

}  // namespace oct
