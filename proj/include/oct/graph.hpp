#pragma once

#include <utility>
#include <vector>

#include "oct/vertex_set.hpp"

namespace oct {

// Undirected simple graph with dense 0-based vertex ids and bitset
// adjacency rows. Immutable after construction: every "mutation" builds a
// new graph or works on an alive-mask, so instances are safe to share
// across threads.
struct InducedSubgraph;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    // Validates ids and rejects self-loops; duplicate edges collapse.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::all(n_); }

    void add_edge(int u, int v);  // build-time only

    // G[s]; the map sends the i-th smallest member of s to i.
    InducedSubgraph induced_subgraph(const VertexSet& s) const;

    // G - s, i.e. the subgraph induced by the complement of s.
    Graph delete_vertices(const VertexSet& s) const;

    // Partition into connected components, ordered by minimum member.
    std::vector<VertexSet> connected_components() const;
    // Same, restricted to the alive-mask-induced subgraph; components are
    // reported in original ids.
    std::vector<VertexSet> components_within(const VertexSet& alive) const;

    // Open or closed neighborhood of a set.
    VertexSet neighborhood(const VertexSet& s, bool closed) const;
    // Neighborhood inside the alive-mask-induced subgraph (s must be alive).
    VertexSet neighborhood_within(const VertexSet& s, const VertexSet& alive, bool closed) const;

private:
    void check_subset(const VertexSet& s) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

// Result of taking an induced subgraph: the new graph plus both directions
// of the id mapping; old_to_new[v] is -1 outside the set.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

}  // namespace oct
