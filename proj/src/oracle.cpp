#include "oct/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "oct/errors.hpp"
#include "oct/rng.hpp"
#include "oct/structure.hpp"

namespace oct {

namespace {

// Is the subset (as a bitmask over 0..n-1) two-colorable? Adjacency comes
// as per-vertex masks.
bool mask_bipartite(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    std::uint32_t colored = 0, color = 0;  // color: bit set = "right"
    std::uint32_t todo = mask;
    while (todo) {
        std::uint32_t root = todo & (~todo + 1);
        colored |= root;
        std::uint32_t frontier = root;
        bool frontier_left = true;
        while (frontier) {
            std::uint32_t nexts = 0;
            for (std::uint32_t rest = frontier; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                nexts |= adj[v];
            }
            nexts &= mask;
            // A neighbor landing in the frontier's own color class closes an
            // odd cycle (BFS levels differ by at most one).
            std::uint32_t same = frontier_left ? colored & ~color : colored & color;
            if (nexts & same) return false;
            nexts &= ~colored;
            colored |= nexts;
            if (frontier_left) color |= nexts;  // neighbors of left go right
            frontier = nexts;
            frontier_left = !frontier_left;
        }
        todo = mask & ~colored;
    }
    return true;
}

}  // namespace

Solution oct_brute(const Graph& g, const Weights& w) {
    const int n = g.vertex_count();
    if (n > 20)
        throw SizeLimitError("oct_brute supports at most 20 vertices, got " + std::to_string(n));

    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        g.neighbors(u).for_each([&](int v) { adj[u] |= 1u << v; });

    std::uint32_t best_mask = 0;
    Rational best_weight(0);
    const std::uint64_t limit = 1ULL << n;
    for (std::uint64_t s64 = 0; s64 < limit; ++s64) {
        std::uint32_t s = static_cast<std::uint32_t>(s64);
        if (!mask_bipartite(adj, s)) continue;
        Rational weight;
        for (std::uint32_t rest = s; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            weight += w[v];
        }
        bool better = weight > best_weight;
        if (!better && weight == best_weight && s != best_mask) {
            // Equal-weight optima are never subsets of each other, so the
            // owner of the lowest differing vertex is lex-smaller.
            std::uint32_t diff = s ^ best_mask;
            better = (s & (diff & (~diff + 1))) != 0;
        }
        if (better) {
            best_weight = weight;
            best_mask = s;
        }
    }

    Solution out;
    out.vertices = VertexSet(n);
    for (std::uint32_t rest = best_mask; rest;) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        out.vertices.set(v);
    }
    out.weight = best_weight;
    auto bip = bipartition_within(g, out.vertices);
    assert(bip.has_value());
    out.certificate = *bip;
    out.parts = g.components_within(out.vertices);
    return out;
}

bool is_p5_free(const Graph& g, std::array<int, 5>* witness) {
    auto found = find_induced_p5(g);
    if (found && witness) *witness = *found;
    return !found.has_value();
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int p = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (1ULL << p); ++mask) {
        Graph g(n);
        for (int i = 0; i < p; ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        fn(g);
    }
}

void enumerate_small_p5free(int max_n, const std::function<void(const Graph&)>& fn) {
    if (max_n > 7)
        throw SizeLimitError("enumerate_small_p5free supports at most 7 vertices, got " +
                             std::to_string(max_n));
    for (int n = 1; n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_p5_free(g)) fn(g);
        });
}

namespace {

Graph random_graph(Rng& rng, int n, const Rational& density) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(density)) g.add_edge(u, v);
    return g;
}

Graph gen_rejection(Rng& rng, int n, const Rational& density) {
    constexpr int kBudget = 20000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        Graph g = random_graph(rng, n, density);
        if (is_p5_free(g)) return g;
    }
    throw SizeLimitError("rejection sampling found no P5-free graph within " +
                         std::to_string(kBudget) + " attempts");
}

// Random P5-free quotient on q <= 5 vertices. Resamples until certified;
// on 5 vertices only the 60 labeled P5s are excluded, so this terminates
// almost immediately.
Graph random_quotient(Rng& rng, int q) {
    while (true) {
        Graph g(q);
        switch (rng.below(4)) {
            case 0:  // clique
                for (int u = 0; u < q; ++u)
                    for (int v = u + 1; v < q; ++v) g.add_edge(u, v);
                break;
            case 1:  // independent set
                break;
            case 2:  // cycle (C5 when q = 5; shorter cycles otherwise)
                if (q >= 3)
                    for (int u = 0; u < q; ++u) g.add_edge(u, (u + 1) % q);
                else if (q == 2)
                    g.add_edge(0, 1);
                break;
            default:  // arbitrary certified sample
                g = random_graph(rng, q, Rational(1, 2));
                break;
        }
        if (is_p5_free(g)) return g;
    }
}

// Module substitution: each quotient vertex is replaced by a recursively
// generated P5-free graph on its share of the vertices. An induced P5 meets
// every module in at most one vertex, so the composition stays P5-free.
Graph gen_substitution(Rng& rng, int n) {
    if (n == 1) return Graph(1);
    int q = rng.range(2, std::min(n, 5));
    Graph quotient = random_quotient(rng, q);

    // Split n into q positive part sizes.
    std::vector<int> sizes(q, 1);
    for (int extra = n - q; extra > 0; --extra) sizes[rng.below(q)] += 1;

    std::vector<Graph> parts;
    parts.reserve(q);
    for (int i = 0; i < q; ++i) parts.push_back(gen_substitution(rng, sizes[i]));

    std::vector<int> offset(q, 0);
    for (int i = 1; i < q; ++i) offset[i] = offset[i - 1] + sizes[i - 1];

    Graph g(n);
    for (int i = 0; i < q; ++i) {
        const Graph& part = parts[i];
        for (int u = 0; u < part.vertex_count(); ++u)
            part.neighbors(u).for_each([&](int v) {
                if (v > u) g.add_edge(offset[i] + u, offset[i] + v);
            });
        for (int j = i + 1; j < q; ++j)
            if (quotient.adjacent(i, j))
                for (int u = 0; u < sizes[i]; ++u)
                    for (int v = 0; v < sizes[j]; ++v) g.add_edge(offset[i] + u, offset[j] + v);
    }
    return g;
}

// Random split graph: a clique plus an independent set with arbitrary cross
// edges. P5 contains an induced 2K2, so split graphs are always P5-free.
Graph gen_split_like(Rng& rng, int n, const Rational& density) {
    Graph g(n);
    std::vector<bool> in_clique(n);
    for (int v = 0; v < n; ++v) in_clique[v] = rng.chance(1, 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (in_clique[u] && in_clique[v])
                g.add_edge(u, v);
            else if ((in_clique[u] || in_clique[v]) && rng.chance(density))
                g.add_edge(u, v);
        }
    return g;
}

}  // namespace

Graph gen_p5free(const GenModel& model) {
    if (model.n < 1) throw std::invalid_argument("generator needs n >= 1");
    Rng rng(model.seed);
    Graph g;
    switch (model.kind) {
        case GenKind::rejection:
            g = gen_rejection(rng, model.n, model.density);
            break;
        case GenKind::substitution:
            g = gen_substitution(rng, model.n);
            break;
        case GenKind::split_like:
            g = gen_split_like(rng, model.n, model.density);
            break;
    }
    std::array<int, 5> witness;
    if (!is_p5_free(g, &witness)) throw std::logic_error("generator produced a non-P5-free graph");
    return g;
}

}  // namespace oct
