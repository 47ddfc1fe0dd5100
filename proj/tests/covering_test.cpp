#include <doctest.h>

#include <random>

#include "oct/covering.hpp"
#include "oct/mwis.hpp"
#include "oct/oracle.hpp"
#include "oct/rng.hpp"

using namespace oct;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

SeedDominator edge_seed(const Graph& g, int u, int v) {
    REQUIRE(g.adjacent(u, v));
    int n = g.vertex_count();
    return SeedDominator{VertexSet::of(n, {u, v}),
                         {VertexSet::of(n, {std::min(u, v)}), VertexSet::of(n, {std::max(u, v)})}};
}

bool family_contains(const CoveringFamily& fam, const VertexSet& members) {
    for (const CandidateSet& c : fam.sets)
        if (c.members == members) return true;
    return false;
}

// Reference reducer: apply the three rules one vertex (or one component) at
// a time in a seeded random order until fixpoint, mirroring the batch rules.
struct ReplayResult {
    VertexSet after_common;
    VertexSet after_modules;
    VertexSet after_boundary;
};

ReplayResult replay_one_at_a_time(const Graph& g, const SeedDominator& seed,
                                  const VertexSet& dprime, std::mt19937_64& rng) {
    int n = g.vertex_count();
    VertexSet alive = g.vertices();
    auto random_pick = [&](const VertexSet& pool) {
        std::vector<int> v = pool.to_vector();
        return v[rng() % v.size()];
    };

    while (true) {
        VertexSet common = g.neighborhood_within(seed.parts.left, alive, false) &
                           g.neighborhood_within(seed.parts.right, alive, false);
        if (common.empty()) break;
        alive.reset(random_pick(common));
    }
    ReplayResult out;
    out.after_common = alive;

    while (true) {
        VertexSet rest = alive - g.neighborhood_within(seed.vertices, alive, true);
        std::vector<VertexSet> bad;
        for (const VertexSet& comp : g.components_within(rest))
            if (!is_module_within(g, comp, alive)) bad.push_back(comp);
        if (bad.empty()) break;
        alive -= bad[rng() % bad.size()];
    }
    out.after_modules = alive;

    if (!dprime.is_subset_of(alive)) {
        out.after_boundary = VertexSet(n);  // marker: dprime died, skip
        return out;
    }
    VertexSet cstar = g.neighborhood_within(seed.vertices | dprime, alive, true);
    while (true) {
        VertexSet outside = alive - cstar;
        VertexSet eligible(n);
        (cstar & alive).for_each([&](int u) {
            if (g.neighbors(u).intersects(outside)) eligible.set(u);
        });
        if (eligible.empty()) break;
        alive.reset(random_pick(eligible));
    }
    out.after_boundary = alive;
    return out;
}

}  // namespace

TEST_CASE("reduce_common_neighbors on the fixed examples") {
    // C4, seed edge {0,1}: no vertex sees both sides.
    Graph c4 = cycle(4);
    Weights u4 = Weights::unit(4);
    ReducedState st = reduce_common_neighbors(make_reduced_state(c4, u4, edge_seed(c4, 0, 1)));
    CHECK(st.alive == c4.vertices());
    CHECK(st.deleted_common.empty());

    // Triangle, seed edge {0,1}: vertex 2 sees both.
    Graph k3 = cycle(3);
    Weights u3 = Weights::unit(3);
    st = reduce_common_neighbors(make_reduced_state(k3, u3, edge_seed(k3, 0, 1)));
    CHECK(st.deleted_common == VertexSet::of(3, {2}));
    CHECK(st.alive == VertexSet::of(3, {0, 1}));

    // Paw: triangle 1,2,3 plus pendant 0 on 1; seed P3 {0,2}/{1} kills 3.
    Graph paw = Graph::build(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}});
    SeedDominator p3seed{VertexSet::of(4, {0, 1, 2}),
                         {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1})}};
    st = reduce_common_neighbors(make_reduced_state(paw, Weights::unit(4), p3seed));
    CHECK(st.deleted_common == VertexSet::of(4, {3}));
}

TEST_CASE("prune_nonmodule_components on the fixed examples") {
    // C4, seed edge {0,1}: nothing outside N[seed].
    Graph c4 = cycle(4);
    Weights u4 = Weights::unit(4);
    ReducedState st = prune_nonmodule_components(
        reduce_common_neighbors(make_reduced_state(c4, u4, edge_seed(c4, 0, 1))));
    CHECK(st.deleted_nonmodule.empty());

    // Star K1,3 centered at 0, seed edge {0,1}: nothing outside N[seed].
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    st = prune_nonmodule_components(
        reduce_common_neighbors(make_reduced_state(star, u4, edge_seed(star, 0, 1))));
    CHECK(st.deleted_nonmodule.empty());

    // Seed edge {0,1}; u=2 in N(0) only; component {3,4} with 3-2 edge but
    // no 4-2 edge is not a module and dies.
    Graph g = Graph::build(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}});
    ModuleWitness w;
    CHECK_FALSE(is_module(g, VertexSet::of(5, {3, 4}), &w));
    CHECK(w.u == 2);
    st = prune_nonmodule_components(
        reduce_common_neighbors(make_reduced_state(g, Weights::unit(5), edge_seed(g, 0, 1))));
    CHECK(st.deleted_nonmodule == VertexSet::of(5, {3, 4}));
    CHECK(st.alive == VertexSet::of(5, {0, 1, 2}));
}

TEST_CASE("candidate_for on the fixed examples") {
    // C4 unit, seed {0,1}, dprime empty: candidate is the whole cycle.
    Graph c4 = cycle(4);
    Weights u4 = Weights::unit(4);
    ReducedState st = prune_nonmodule_components(
        reduce_common_neighbors(make_reduced_state(c4, u4, edge_seed(c4, 0, 1))));
    ReducedState after;
    CandidateSet cand = candidate_for(st, VertexSet(4), &after);
    CHECK(cand.members == c4.vertices());
    CHECK(after.deleted_boundary.empty());

    // A single edge as the whole graph.
    Graph e = Graph::build(2, {{0, 1}});
    Weights u2 = Weights::unit(2);
    ReducedState est = prune_nonmodule_components(
        reduce_common_neighbors(make_reduced_state(e, u2, edge_seed(e, 0, 1))));
    CHECK(candidate_for(est, VertexSet(2)).members == VertexSet::of(2, {0, 1}));

    // Candidates keep at least the two seed vertices.
    CHECK(cand.members.count() >= 2);
}

TEST_CASE("boundary rule uses alive-graph neighborhoods: diamond stays solvable") {
    // K4 minus the edge 0-2. The optimum {0,1,2} must appear as a candidate;
    // with original-graph neighborhoods in the boundary rule every candidate
    // would collapse after the common-neighbor deletions.
    Graph diamond = Graph::build(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    Weights w = Weights::unit(4);
    CoveringFamily fam = build_covering_family(diamond, w);
    CHECK(family_contains(fam, VertexSet::of(4, {0, 1, 2})));
    CHECK(family_contains(fam, VertexSet::of(4, {0, 2, 3})));
}

TEST_CASE("family on fixed graphs") {
    CoveringFamily single = build_covering_family(Graph(1), Weights::unit(1));
    REQUIRE(single.sets.size() == 1);
    CHECK(single.sets[0].members == VertexSet::of(1, {0}));

    CoveringFamily edge = build_covering_family(Graph::build(2, {{0, 1}}), Weights::unit(2));
    CHECK(family_contains(edge, VertexSet::of(2, {0})));
    CHECK(family_contains(edge, VertexSet::of(2, {1})));
    CHECK(family_contains(edge, VertexSet::of(2, {0, 1})));

    // C5 unit: some member carries 4 vertices (the optimum).
    CoveringFamily c5 = build_covering_family(cycle(5), Weights::unit(5));
    bool has4 = false;
    for (const CandidateSet& c : c5.sets) has4 = has4 || c.members.count() == 4;
    CHECK(has4);
}

TEST_CASE("family members are bipartite, deduplicated, canonically ordered") {
    Rng wrng(83);
    std::mt19937_64 seeds(89);
    for (int round = 0; round < 40; ++round) {
        GenModel model;
        model.kind = round % 2 ? GenKind::substitution : GenKind::split_like;
        model.seed = seeds();
        model.n = 4 + round % 6;
        Graph g = gen_p5free(model);
        std::vector<Rational> wv;
        for (int i = 0; i < g.vertex_count(); ++i) wv.push_back(wrng.weight());
        Weights w(wv);
        CoveringFamily fam = build_covering_family(g, w);  // throws on violation

        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(family_contains(fam, VertexSet::of(g.vertex_count(), {v})));
        for (std::size_t i = 0; i + 1 < fam.sets.size(); ++i) {
            const VertexSet& a = fam.sets[i].members;
            const VertexSet& b = fam.sets[i + 1].members;
            CHECK_FALSE(a == b);
            bool ordered = a.count() < b.count() ||
                           (a.count() == b.count() && VertexSet::lex_less(a, b));
            CHECK(ordered);
        }
        CHECK(fam.stats.deduped == fam.sets.size());
        CHECK(fam.stats.raw_candidates >= fam.stats.deduped);
    }
}

TEST_CASE("raw count respects the seed/extension accounting bound") {
    std::mt19937_64 seeds(97);
    for (int round = 0; round < 20; ++round) {
        GenModel model;
        model.kind = GenKind::substitution;
        model.seed = seeds();
        model.n = 5 + round % 5;
        Graph g = gen_p5free(model);
        CoveringFamily fam = build_covering_family(g, Weights::unit(g.vertex_count()));
        std::uint64_t n = g.vertex_count();
        std::uint64_t per = 1 + n + n * (n - 1) / 2 + (n < 3 ? 0 : n * (n - 1) * (n - 2) / 6);
        CHECK(fam.stats.raw_candidates <=
              n + (fam.stats.seed_edges + fam.stats.seed_p3s) * per);
        CHECK(fam.stats.seed_edges == static_cast<std::uint64_t>(g.edge_count()));
    }
}

TEST_CASE("swapping seed orientations leaves the family unchanged") {
    std::mt19937_64 seeds(101);
    auto run = [&](const Graph& g) {
        Weights w = Weights::unit(g.vertex_count());
        CoveringFamily a = build_covering_family(g, w);
        std::vector<SeedDominator> flipped;
        for (SeedDominator s : enumerate_seeds(g)) flipped.push_back(swap_orientation(s));
        CoveringFamily b = build_covering_family_with_seeds(g, w, flipped);
        REQUIRE(a.sets.size() == b.sets.size());
        for (std::size_t i = 0; i < a.sets.size(); ++i)
            CHECK(a.sets[i].members == b.sets[i].members);
    };
    enumerate_small_p5free(5, run);
    for (int round = 0; round < 60; ++round) {
        GenModel model;
        model.kind = round % 2 ? GenKind::substitution : GenKind::split_like;
        model.seed = seeds();
        model.n = 6 + round % 2;
        run(gen_p5free(model));
    }
}

TEST_CASE("batch deletions equal one-at-a-time deletions in any order") {
    std::mt19937_64 rng(103);
    int checked = 0;
    for (int round = 0; round < 250; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        auto all_seeds = enumerate_seeds(g);
        if (all_seeds.empty()) continue;
        const SeedDominator& seed = all_seeds[rng() % all_seeds.size()];

        Weights w = Weights::unit(n);
        ReducedState st =
            prune_nonmodule_components(reduce_common_neighbors(make_reduced_state(g, w, seed)));

        std::vector<int> avec = st.alive.to_vector();
        VertexSet dprime(n);
        for (int pick = 0; pick < 2 && !avec.empty(); ++pick) dprime.set(avec[rng() % avec.size()]);

        ReducedState after;
        candidate_for(st, dprime, &after);

        ReplayResult ref = replay_one_at_a_time(g, seed, dprime, rng);
        CHECK(ref.after_common ==
              reduce_common_neighbors(make_reduced_state(g, w, seed)).alive);
        CHECK(ref.after_modules == st.alive);
        CHECK(ref.after_boundary == after.alive);
        ++checked;
    }
    CHECK(checked > 100);
}
