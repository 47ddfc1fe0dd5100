#include "oct/structure.hpp"

#include <algorithm>

namespace oct {

std::optional<Bipartition> bipartition_of(const Graph& g) {
    return bipartition_within(g, g.vertices());
}

std::optional<Bipartition> bipartition_within(const Graph& g, const VertexSet& alive) {
    const int n = g.vertex_count();
    Bipartition bip{VertexSet(n), VertexSet(n)};
    VertexSet unseen = alive;
    for (int root = unseen.first(); root != -1; root = unseen.first()) {
        // BFS two-coloring; the component root (its minimum id) goes left.
        bip.left.set(root);
        unseen.reset(root);
        VertexSet frontier(n);
        frontier.set(root);
        bool frontier_left = true;
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](int u) { next |= g.neighbors(u); });
            next &= alive;
            VertexSet& same = frontier_left ? bip.left : bip.right;
            VertexSet& other = frontier_left ? bip.right : bip.left;
            if (next.intersects(same)) return std::nullopt;  // odd cycle
            next -= other;
            other |= next;
            unseen -= next;
            frontier = next;
            frontier_left = !frontier_left;
        }
    }
    return bip;
}

std::optional<std::vector<int>> find_odd_cycle_within(const Graph& g, const VertexSet& alive) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -1), color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (!alive.test(root) || color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            VertexSet nb = g.neighbors(u) & alive;
            for (int v = nb.first(); v != -1; v = nb.next(v)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Same-color edge closes an odd cycle through the BFS tree.
                    std::vector<int> pu{u}, pv{v};
                    for (int x = u; parent[x] != -1; x = parent[x]) pu.push_back(parent[x]);
                    for (int x = v; parent[x] != -1; x = parent[x]) pv.push_back(parent[x]);
                    // Drop the common tail above the lowest common ancestor.
                    while (pu.size() >= 2 && pv.size() >= 2 &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    std::vector<int> cycle(pu.rbegin(), pu.rend());  // lca .. u
                    for (std::size_t i = 0; i + 1 < pv.size(); ++i)
                        cycle.push_back(pv[i]);  // v .. just below lca
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        VertexSet closed_a = g.neighbors(a);
        closed_a.set(a);
        const VertexSet& na = g.neighbors(a);
        for (int b = na.first(); b != -1; b = na.next(b)) {
            VertexSet cs = g.neighbors(b) - closed_a;
            for (int c = cs.first(); c != -1; c = cs.next(c)) {
                VertexSet ds = g.neighbors(c) - closed_a - g.neighbors(b);
                ds.reset(b);
                for (int d = ds.first(); d != -1; d = ds.next(d)) {
                    VertexSet es = g.neighbors(d) - closed_a - g.neighbors(b) - g.neighbors(c);
                    es.reset(b);
                    es.reset(c);
                    int e = es.first();
                    if (e != -1) return std::array<int, 5>{a, b, c, d, e};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_module(const Graph& g, const VertexSet& a, ModuleWitness* witness) {
    return is_module_within(g, a, g.vertices(), witness);
}

bool is_module_within(const Graph& g, const VertexSet& a, const VertexSet& alive,
                      ModuleWitness* witness) {
    VertexSet outside = alive - a;
    for (int u = outside.first(); u != -1; u = outside.next(u)) {
        VertexSet hit = g.neighbors(u) & a;
        if (hit.empty() || hit == a) continue;
        if (witness) {
            witness->x = hit.first();
            witness->y = (a - hit).first();
            witness->u = u;
        }
        return false;
    }
    return true;
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& target) {
    return target.is_subset_of(g.neighborhood(d, /*closed=*/true));
}

std::vector<SeedDominator> enumerate_seeds(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<SeedDominator> out;
    for (int u = 0; u < n; ++u) {
        VertexSet nb = g.neighbors(u);
        for (int v = nb.next(u); v != -1; v = nb.next(v)) {
            SeedDominator s{VertexSet::of(n, {u, v}),
                            {VertexSet::of(n, {u}), VertexSet::of(n, {v})}};
            out.push_back(std::move(s));
        }
    }
    for (int mid = 0; mid < n; ++mid) {
        VertexSet nb = g.neighbors(mid);
        for (int a = nb.first(); a != -1; a = nb.next(a)) {
            for (int c = nb.next(a); c != -1; c = nb.next(c)) {
                if (g.adjacent(a, c)) continue;  // triangle, not an induced P3
                VertexSet ends = VertexSet::of(n, {a, c});
                VertexSet middle = VertexSet::of(n, {mid});
                SeedDominator s{VertexSet::of(n, {a, mid, c}),
                                mid < a ? Bipartition{middle, ends} : Bipartition{ends, middle}};
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

}  // namespace oct
