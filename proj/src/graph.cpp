#include "oct/graph.hpp"

#include <stdexcept>
#include <string>

namespace oct {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") references a vertex outside [0," + std::to_string(n) +
                                        ")");
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    if (adj_[u].test(v)) return;  // duplicate
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::check_subset(const VertexSet& s) const {
    if (s.universe_size() != n_)
        throw std::invalid_argument("vertex set universe does not match the graph");
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& s) const {
    check_subset(s);
    InducedSubgraph out;
    out.old_to_new.assign(n_, -1);
    out.new_to_old = s.to_vector();
    const int k = static_cast<int>(out.new_to_old.size());
    for (int i = 0; i < k; ++i) out.old_to_new[out.new_to_old[i]] = i;
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i) {
        VertexSet row = adj_[out.new_to_old[i]] & s;
        row.for_each([&](int old_nb) {
            int j = out.old_to_new[old_nb];
            if (j > i) out.graph.add_edge(i, j);
        });
    }
    return out;
}

Graph Graph::delete_vertices(const VertexSet& s) const {
    check_subset(s);
    VertexSet keep = vertices();
    keep -= s;
    return induced_subgraph(keep).graph;
}

std::vector<VertexSet> Graph::connected_components() const {
    return components_within(vertices());
}

std::vector<VertexSet> Graph::components_within(const VertexSet& alive) const {
    check_subset(alive);
    std::vector<VertexSet> out;
    VertexSet unseen = alive;
    for (int v = unseen.first(); v != -1; v = unseen.first()) {
        // Grow the component of v by repeated frontier expansion.
        VertexSet comp(n_);
        comp.set(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n_);
            frontier.for_each([&](int u) { next |= adj_[u]; });
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet Graph::neighborhood(const VertexSet& s, bool closed) const {
    return neighborhood_within(s, vertices(), closed);
}

VertexSet Graph::neighborhood_within(const VertexSet& s, const VertexSet& alive,
                                     bool closed) const {
    check_subset(s);
    check_subset(alive);
    VertexSet nb(n_);
    s.for_each([&](int v) { nb |= adj_[v]; });
    nb &= alive;
    if (closed)
        nb |= s;
    else
        nb -= s;
    return nb;
}

}  // namespace oct
