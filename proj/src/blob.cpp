#include "oct/blob.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "oct/errors.hpp"
#include "oct/mwis.hpp"
#include "oct/structure.hpp"

namespace oct {

std::vector<VertexSet> split_components(const CoveringFamily& family, const Graph& g,
                                        std::vector<int>* origin) {
    std::vector<VertexSet> parts;
    std::vector<int> first_from;
    std::unordered_map<VertexSet, bool, VertexSet::Hash> seen;
    for (std::size_t i = 0; i < family.sets.size(); ++i)
        for (VertexSet& comp : g.components_within(family.sets[i].members))
            if (seen.emplace(comp, true).second) {
                parts.push_back(std::move(comp));
                first_from.push_back(static_cast<int>(i));
            }

    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        int cx = parts[x].count(), cy = parts[y].count();
        if (cx != cy) return cx < cy;
        return VertexSet::lex_less(parts[x], parts[y]);
    });
    std::vector<VertexSet> sorted_parts;
    std::vector<int> sorted_origin;
    sorted_parts.reserve(parts.size());
    sorted_origin.reserve(parts.size());
    for (std::size_t i : order) {
        sorted_parts.push_back(std::move(parts[i]));
        sorted_origin.push_back(first_from[i]);
    }
    if (origin) *origin = std::move(sorted_origin);
    return sorted_parts;
}

bool touches(const Graph& g, const VertexSet& a, const VertexSet& b) {
    return a.intersects(b) || g.neighborhood(a, /*closed=*/false).intersects(b);
}

BlobGraph build_blob(const Graph& g, const std::vector<VertexSet>& parts, const Weights& w) {
    const int k = static_cast<int>(parts.size());
    BlobGraph blob;
    blob.parts = parts;
    blob.graph = Graph(k);
    blob.origin.assign(k, -1);

    std::vector<VertexSet> reach;  // closed neighborhood of each part
    reach.reserve(k);
    for (const VertexSet& part : parts) reach.push_back(g.neighborhood(part, /*closed=*/true));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (reach[i].intersects(parts[j])) blob.graph.add_edge(i, j);

    std::vector<Rational> lifted;
    lifted.reserve(k);
    for (const VertexSet& part : parts) lifted.push_back(w.sum(part));
    blob.lifted = Weights(std::move(lifted));
    return blob;
}

namespace {

VertexSet map_back(const VertexSet& sub_set, const std::vector<int>& new_to_old, int n) {
    VertexSet out(n);
    sub_set.for_each([&](int v) { out.set(new_to_old[v]); });
    return out;
}

}  // namespace

Solution solve_oct(const Graph& g, const Weights& w, const SolveOptions& options,
                   SolveStats* stats, BlobGraph* blob_out) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (w.size() != n) throw std::invalid_argument("weight table size does not match the graph");

    SolveStats local;
    if (options.class_check) {
        if (auto p5 = find_induced_p5(g)) throw ClassRejection(*p5);
        local.certified = true;
    }

    // Non-positive-weight vertices never help a maximum-weight solution.
    auto sub = g.induced_subgraph(w.positive_support());
    Weights sw = w.restricted(sub.new_to_old);

    CoveringFamily family = build_covering_family(sub.graph, sw);
    local.family_raw = family.stats.raw_candidates;
    local.family_dedup = family.stats.deduped;
    local.mwis_calls = family.stats.mwis_calls;

    std::vector<int> origin;
    std::vector<VertexSet> parts = split_components(family, sub.graph, &origin);
    if (parts.size() > options.blob_cap)
        throw SizeLimitError("blob graph would have " + std::to_string(parts.size()) +
                             " vertices, exceeding the cap of " +
                             std::to_string(options.blob_cap));

    BlobGraph blob = build_blob(sub.graph, parts, sw);
    blob.origin = std::move(origin);
    local.blob_vertices = static_cast<std::uint64_t>(blob.graph.vertex_count());
    local.blob_edges = static_cast<std::uint64_t>(blob.graph.edge_count());

    IsResult picked = mwis_exact(blob.graph, blob.lifted);
    ++local.mwis_calls;

    // Assemble and verify; these checks stay on in every build.
    Solution sol;
    sol.vertices = VertexSet(n);
    Rational lifted_total;
    std::vector<int> chosen = picked.set.to_vector();
    for (int i : chosen) {
        VertexSet part = map_back(blob.parts[i], sub.new_to_old, n);
        if (sol.vertices.intersects(part))
            throw std::logic_error("chosen blob parts are not disjoint");
        sol.vertices |= part;
        lifted_total += blob.lifted[i];
        sol.parts.push_back(std::move(part));
    }
    for (std::size_t x = 0; x < sol.parts.size(); ++x)
        for (std::size_t y = x + 1; y < sol.parts.size(); ++y)
            if (touches(g, sol.parts[x], sol.parts[y]))
                throw std::logic_error("chosen blob parts touch");
    sol.weight = w.sum(sol.vertices);
    if (sol.weight != picked.weight || sol.weight != lifted_total)
        throw std::logic_error("solution weight does not match the blob optimum");
    auto certificate = bipartition_within(g, sol.vertices);
    if (!certificate) throw std::logic_error("solution is not bipartite");
    sol.certificate = *certificate;

    local.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
    if (stats) *stats = local;
    if (blob_out) *blob_out = std::move(blob);
    return sol;
}

}  // namespace oct
