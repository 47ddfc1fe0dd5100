#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"
#include "oct/weights.hpp"

namespace oct {

// Ground truth by exhaustion: maximum-weight vertex set inducing a
// bipartite subgraph, over all 2^n subsets. Ties break to the
// lexicographically smallest member list. Refuses n > 20.
Solution oct_brute(const Graph& g, const Weights& w);

// Certifier; fills `witness` (path order) when a P5 is found.
bool is_p5_free(const Graph& g, std::array<int, 5>* witness = nullptr);

enum class GenKind { rejection, substitution, split_like };

// Instance generator model. Same model -> bit-identical graph.
struct GenModel {
    GenKind kind = GenKind::substitution;
    std::uint64_t seed = 1;
    int n = 8;
    Rational density = Rational(1, 2);
};

// Generates a P5-free graph and certifies it before returning. The
// rejection model throws SizeLimitError when its attempt budget runs out.
Graph gen_p5free(const GenModel& model);

// All labeled graphs on exactly n vertices, edge-mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// All labeled P5-free graphs on 1..max_n vertices; refuses max_n > 7.
void enumerate_small_p5free(int max_n, const std::function<void(const Graph&)>& fn);

}  // namespace oct
