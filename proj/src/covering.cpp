#include "oct/covering.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "oct/mwis.hpp"

namespace oct {

namespace {

// Memoizes engine calls by exact universe mask; graph and weights are fixed
// for one family build, so equal masks are equal subproblems.
class MwisMemo {
public:
    MwisMemo(const Graph& g, const Weights& w) : g_(g), w_(w) {}

    const VertexSet& solve(const VertexSet& universe) {
        auto it = cache_.find(universe);
        if (it != cache_.end()) return it->second;
        ++calls_;
        return cache_.emplace(universe, mwis_exact_within(g_, w_, universe).set).first->second;
    }

    std::uint64_t calls() const { return calls_; }

private:
    const Graph& g_;
    const Weights& w_;
    std::uint64_t calls_ = 0;
    std::unordered_map<VertexSet, VertexSet, VertexSet::Hash> cache_;
};

[[noreturn]] void report_bipartite_violation(const Graph& g, const CandidateSet& cand) {
    std::ostringstream msg;
    msg << "covering candidate is not bipartite; members:";
    cand.members.for_each([&](int v) { msg << ' ' << v; });
    if (cand.provenance.kind == CandidateProvenance::Kind::seeded) {
        msg << "; seed:";
        cand.provenance.seed.vertices.for_each([&](int v) { msg << ' ' << v; });
        msg << "; dprime:";
        cand.provenance.dprime.for_each([&](int v) { msg << ' ' << v; });
    }
    msg << "; odd cycle:";
    if (auto cycle = find_odd_cycle_within(g, cand.members))
        for (int v : *cycle) msg << ' ' << v;
    throw std::logic_error(msg.str());
}

void check_candidate(const Graph& g, const CandidateSet& cand) {
    if (cand.members.empty()) throw std::logic_error("covering candidate is empty");
    if (!bipartition_within(g, cand.members)) report_bipartite_violation(g, cand);
}

CandidateSet candidate_with(ReducedState& state, const VertexSet& dprime, MwisMemo& memo) {
    const Graph& g = *state.graph;

    VertexSet base = state.seed.vertices | dprime;
    VertexSet cstar = g.neighborhood_within(base, state.alive, /*closed=*/true);

    // Batch-delete C* vertices that still see the alive graph outside C*.
    // Only C* members get deleted here, so every vertex's outside view is
    // stable and one pass reaches the fixpoint.
    VertexSet outside = state.alive - cstar;
    VertexSet boundary(g.vertex_count());
    cstar.for_each([&](int u) {
        if (g.neighbors(u).intersects(outside)) boundary.set(u);
    });
    state.alive -= boundary;
    state.deleted_boundary = boundary;
    assert(state.seed.vertices.is_subset_of(state.alive));

    VertexSet left_universe = g.neighborhood_within(state.seed.parts.right, state.alive, false);
    VertexSet right_universe = g.neighborhood_within(state.seed.parts.left, state.alive, false);

    CandidateSet out;
    out.provenance.kind = CandidateProvenance::Kind::seeded;
    out.provenance.seed = state.seed;
    out.provenance.dprime = dprime;
    out.members = memo.solve(left_universe) | memo.solve(right_universe);
    check_candidate(g, out);
    return out;
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

ReducedState make_reduced_state(const Graph& g, const Weights& w, const SeedDominator& seed) {
    ReducedState st;
    st.graph = &g;
    st.weights = &w;
    st.seed = seed;
    st.alive = g.vertices();
    st.deleted_common = VertexSet(g.vertex_count());
    st.deleted_nonmodule = VertexSet(g.vertex_count());
    st.deleted_boundary = VertexSet(g.vertex_count());
    return st;
}

ReducedState reduce_common_neighbors(ReducedState state) {
    const Graph& g = *state.graph;
    VertexSet common = g.neighborhood_within(state.seed.parts.left, state.alive, false) &
                       g.neighborhood_within(state.seed.parts.right, state.alive, false);
    state.alive -= common;
    state.deleted_common = common;
    assert(state.seed.vertices.is_subset_of(state.alive));
    return state;
}

ReducedState prune_nonmodule_components(ReducedState state) {
    const Graph& g = *state.graph;
    VertexSet closed = g.neighborhood_within(state.seed.vertices, state.alive, true);
    VertexSet rest = state.alive - closed;
    VertexSet doomed(g.vertex_count());
    for (const VertexSet& comp : g.components_within(rest))
        if (!is_module_within(g, comp, state.alive)) doomed |= comp;
    state.alive -= doomed;
    state.deleted_nonmodule = doomed;
    return state;
}

CandidateSet candidate_for(ReducedState state, const VertexSet& dprime,
                           ReducedState* state_after) {
    assert(dprime.is_subset_of(state.alive));
    assert(dprime.count() <= 3);
    MwisMemo memo(*state.graph, *state.weights);
    CandidateSet out = candidate_with(state, dprime, memo);
    if (state_after) *state_after = std::move(state);
    return out;
}

CoveringFamily build_covering_family_with_seeds(const Graph& g, const Weights& w,
                                                const std::vector<SeedDominator>& seeds) {
    const int n = g.vertex_count();
    CoveringFamily family;
    MwisMemo memo(g, w);
    std::unordered_map<VertexSet, std::size_t, VertexSet::Hash> index;

    auto insert = [&](CandidateSet cand) {
        if (index.emplace(cand.members, family.sets.size()).second)
            family.sets.push_back(std::move(cand));
    };

    for (int v = 0; v < n; ++v) {
        CandidateSet single;
        single.members = VertexSet::of(n, {v});
        single.provenance.kind = CandidateProvenance::Kind::singleton;
        single.provenance.singleton_vertex = v;
        insert(std::move(single));
    }
    family.stats.raw_candidates = static_cast<std::uint64_t>(n);

    for (const SeedDominator& seed : seeds) {
        if (seed.vertices.count() == 2)
            ++family.stats.seed_edges;
        else
            ++family.stats.seed_p3s;

        ReducedState st = prune_nonmodule_components(
            reduce_common_neighbors(make_reduced_state(g, w, seed)));
        const std::vector<int> avec = st.alive.to_vector();
        const int a = static_cast<int>(avec.size());

        // C* = N[seed] ∪ N[d'_1] ∪ ... built incrementally from per-vertex
        // closed alive rows; buffers are reused across the subset loops.
        VertexSet nd_base = g.neighborhood_within(seed.vertices, st.alive, /*closed=*/true);
        std::vector<VertexSet> row(a);
        for (int i = 0; i < a; ++i) {
            row[i] = g.neighbors(avec[i]) & st.alive;
            row[i].set(avec[i]);
        }

        // Distinct C* masks give identical candidates: the boundary rule and
        // both solver universes are functions of (state, C*) alone.
        std::unordered_set<VertexSet, VertexSet::Hash> seen_cstar;
        auto run = [&](const VertexSet& cstar, std::initializer_list<int> dprime_ids) {
            ++family.stats.raw_candidates;
            if (seen_cstar.contains(cstar)) return;  // probe first: no node churn
            seen_cstar.insert(cstar);
            ReducedState local = st;
            insert(candidate_with(local, VertexSet::of(n, dprime_ids), memo));
        };

        VertexSet ci(n), cij(n), cijk(n);
        run(nd_base, {});
        for (int i = 0; i < a; ++i) {
            ci = nd_base;
            ci |= row[i];
            run(ci, {avec[i]});
            for (int j = i + 1; j < a; ++j) {
                cij = ci;
                cij |= row[j];
                run(cij, {avec[i], avec[j]});
                for (int k = j + 1; k < a; ++k) {
                    cijk = cij;
                    cijk |= row[k];
                    run(cijk, {avec[i], avec[j], avec[k]});
                }
            }
        }
    }

    // Concrete O(n^6) accounting.
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t per_seed = 1 + un + choose2(un) + choose3(un);
    std::uint64_t bound =
        un + (family.stats.seed_edges + family.stats.seed_p3s) * per_seed;
    if (family.stats.raw_candidates > bound)
        throw std::logic_error("covering family raw count " +
                               std::to_string(family.stats.raw_candidates) +
                               " exceeds the bound " + std::to_string(bound));

    std::sort(family.sets.begin(), family.sets.end(),
              [](const CandidateSet& x, const CandidateSet& y) {
                  int cx = x.members.count(), cy = y.members.count();
                  if (cx != cy) return cx < cy;
                  return VertexSet::lex_less(x.members, y.members);
              });
    family.stats.deduped = family.sets.size();
    family.stats.mwis_calls = memo.calls();
    return family;
}

CoveringFamily build_covering_family(const Graph& g, const Weights& w) {
    return build_covering_family_with_seeds(g, w, enumerate_seeds(g));
}

}  // namespace oct
