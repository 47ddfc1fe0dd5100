#include "oct/selftest.hpp"

#include <algorithm>
#include <ostream>

#include "oct/blob.hpp"
#include "oct/oracle.hpp"
#include "oct/report.hpp"
#include "oct/rng.hpp"

namespace oct {

namespace {

Weights random_weights(int n, Rng& rng) {
    std::vector<Rational> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) w.push_back(rng.weight());
    return Weights(std::move(w));
}

void check_one(const Graph& g, const Weights& w, SelftestSummary& sum, std::ostream& log) {
    SolveStats stats;
    Solution got = solve_oct(g, w, SolveOptions{}, &stats);
    Solution want = oct_brute(g, w);
    ++sum.solves;
    sum.max_family_raw = std::max(sum.max_family_raw, stats.family_raw);
    sum.max_blob_vertices = std::max(sum.max_blob_vertices, stats.blob_vertices);

    if (got.weight != want.weight) {
        ++sum.mismatches;
        log << "MISMATCH solver=" << got.weight << " brute=" << want.weight
            << " on instance:\n"
            << serialize_instance(g, w);
        return;
    }

    Instance inst{g, w};
    VerifyResult vr = verify_report(inst, report_to_json(make_report(inst, got, stats)));
    if (!vr.ok) {
        ++sum.verify_failures;
        log << "VERIFY FAILURE (" << vr.violated << ") on instance:\n"
            << serialize_instance(g, w);
    }
}

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& options, std::ostream& log) {
    SelftestSummary sum;
    Rng rng(options.seed);

    int max_n = std::min(options.max_n, 7);
    if (max_n >= 1) {
        enumerate_small_p5free(max_n, [&](const Graph& g) {
            ++sum.exhaustive_graphs;
            check_one(g, Weights::unit(g.vertex_count()), sum, log);
            check_one(g, random_weights(g.vertex_count(), rng), sum, log);
        });
        log << "exhaustive sweep: " << sum.exhaustive_graphs << " P5-free graphs (n <= "
            << max_n << "), " << sum.solves << " solves\n";
    }

    for (int i = 0; i < options.samples; ++i) {
        GenModel model;
        model.kind = i % 2 == 0 ? GenKind::substitution : GenKind::rejection;
        model.seed = rng.next_u64();
        model.n = 8 + i % 7;
        model.density = Rational(17, 20);
        Graph g = gen_p5free(model);
        ++sum.random_graphs;
        check_one(g, random_weights(g.vertex_count(), rng), sum, log);
    }
    if (options.samples > 0)
        log << "random sweep: " << sum.random_graphs << " generated graphs (8 <= n <= 14)\n";

    log << (sum.ok() ? "selftest passed" : "selftest FAILED") << ": " << sum.solves
        << " solves, " << sum.mismatches << " mismatches, " << sum.verify_failures
        << " verify failures, max family raw " << sum.max_family_raw << ", max blob "
        << sum.max_blob_vertices << " vertices\n";
    return sum;
}

}  // namespace oct
