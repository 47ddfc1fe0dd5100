#include "oct/mwis.hpp"

#include <cassert>
#include <stdexcept>

#include "oct/errors.hpp"

namespace oct {

namespace {

// Branch-and-bound over alive-masks of a fixed (graph, weights) pair.
// Branching vertex: maximum degree in the remaining graph, minimum id on
// ties. Reductions: a vertex whose weight dominates its remaining open
// neighborhood is always taken (isolated vertices are the zero-neighbor
// case). Upper bound: total remaining weight minus, for each edge of a
// greedy matching, the lighter endpoint (an independent set misses at
// least that much per matched pair).
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const Weights& w) : g_(g), w_(w) {}

    Rational max_weight(const VertexSet& universe) {
        best_ = Rational(0);  // the empty set is always available
        decision_mode_ = false;
        dfs(universe, Rational(0));
        return best_;
    }

    // Does some independent subset of `universe` reach weight `target`?
    // (Only meaningful when target <= max_weight(universe); the search
    // stops as soon as the target is certified.)
    bool achieves(const VertexSet& universe, const Rational& target) {
        if (!target.is_positive()) return true;
        target_ = target;
        reached_ = false;
        decision_mode_ = true;
        dfs(universe, Rational(0));
        return reached_;
    }

private:
    void dfs(VertexSet alive, Rational taken) {
        if (decision_mode_ && reached_) return;

        // Reductions to fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = alive.first(); v != -1; v = alive.next(v)) {
                VertexSet nb = g_.neighbors(v) & alive;
                if (nb.empty()) {
                    taken += w_[v];
                    alive.reset(v);
                    continue;  // scan position stays valid
                }
                Rational nb_weight = w_.sum(nb);
                if (nb_weight <= w_[v]) {
                    taken += w_[v];
                    alive -= nb;
                    alive.reset(v);
                    changed = true;
                    break;  // neighborhood changed behind the scan; restart
                }
            }
        }

        if (alive.empty()) {
            record(taken);
            return;
        }

        // Bound.
        Rational total = w_.sum(alive);
        Rational correction = matching_correction(alive);
        Rational bound = taken + total - correction;
        if (decision_mode_) {
            if (bound < target_) return;
        } else {
            if (bound <= best_) return;
        }

        // Pick the max-degree vertex.
        int pick = -1, pick_deg = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            int deg = (g_.neighbors(v) & alive).count();
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }

        // Include first: good solutions early tighten the bound.
        VertexSet in = alive - g_.neighbors(pick);
        in.reset(pick);
        dfs(in, taken + w_[pick]);
        if (decision_mode_ && reached_) return;
        VertexSet out = alive;
        out.reset(pick);
        dfs(out, taken);
    }

    void record(const Rational& value) {
        if (decision_mode_) {
            if (value >= target_) reached_ = true;
        } else if (value > best_) {
            best_ = value;
        }
    }

    Rational matching_correction(const VertexSet& alive) const {
        Rational corr;
        VertexSet unmatched = alive;
        for (int v = unmatched.first(); v != -1; v = unmatched.next(v)) {
            VertexSet nb = g_.neighbors(v) & unmatched;
            int u = nb.first();
            if (u == -1) continue;
            unmatched.reset(v);
            unmatched.reset(u);
            corr += w_[v] < w_[u] ? w_[v] : w_[u];
        }
        return corr;
    }

    const Graph& g_;
    const Weights& w_;
    Rational best_;
    Rational target_;
    bool reached_ = false;
    bool decision_mode_ = false;
};

void require_positive(const Weights& w, const VertexSet& universe) {
    for (int v = universe.first(); v != -1; v = universe.next(v))
        if (!w[v].is_positive())
            throw std::invalid_argument("mwis requires strictly positive weights");
}

}  // namespace

IsResult mwis_exact_within(const Graph& g, const Weights& w, const VertexSet& universe) {
    require_positive(w, universe);
    BranchAndBound solver(g, w);
    Rational optimum = solver.max_weight(universe);

    // Extract the lexicographically smallest optimum: the smallest vertex
    // contained in any optimum belongs to it, so scan ids upward, keeping v
    // exactly when some optimum of the residual problem contains it.
    IsResult out{VertexSet(g.vertex_count()), optimum};
    VertexSet mask = universe;
    Rational remaining = optimum;
    int v = mask.first();
    while (v != -1 && remaining.is_positive()) {
        VertexSet rest = mask - g.neighbors(v);
        rest.reset(v);
        Rational need = remaining - w[v];
        assert(!need.is_negative());  // {v} alone cannot beat the optimum
        if (solver.achieves(rest, need)) {
            out.set.set(v);
            remaining = need;
            mask = rest;
        } else {
            mask.reset(v);
        }
        v = mask.next(v);
    }
    assert(remaining.is_zero());
    for (int a = out.set.first(); a != -1; a = out.set.next(a))
        assert(!g.neighbors(a).intersects(out.set));
    return out;
}

IsResult mwis_exact(const Graph& g, const Weights& w) {
    return mwis_exact_within(g, w, g.vertices());
}

IsResult mwis_brute_within(const Graph& g, const Weights& w, const VertexSet& universe) {
    const std::vector<int> members = universe.to_vector();
    const int k = static_cast<int>(members.size());
    if (k > 24)
        throw SizeLimitError("mwis_brute supports at most 24 vertices, got " +
                             std::to_string(k));
    require_positive(w, universe);

    // Local adjacency bitmasks over the member indices.
    std::vector<std::uint32_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(members[i], members[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }

    std::uint32_t best_mask = 0;
    Rational best_weight(0);
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        bool independent = true;
        for (std::uint32_t rest = s; rest;) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            if (adj[i] & s) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        Rational weight;
        for (std::uint32_t rest = s; rest;) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            weight += w[members[i]];
        }
        // Lower subset mask = lexicographically smaller member list here,
        // because ids ascend with bit positions and neither optimum can be
        // a subset of the other (weights are positive).
        if (weight > best_weight ||
            (weight == best_weight && s != best_mask &&
             (s & ((s ^ best_mask) & ~((s ^ best_mask) - 1))))) {
            best_weight = weight;
            best_mask = s;
        }
    }

    IsResult out{VertexSet(g.vertex_count()), best_weight};
    for (std::uint32_t rest = best_mask; rest;) {
        int i = __builtin_ctz(rest);
        rest &= rest - 1;
        out.set.set(members[i]);
    }
    return out;
}

IsResult mwis_brute(const Graph& g, const Weights& w) {
    return mwis_brute_within(g, w, g.vertices());
}

}  // namespace oct
