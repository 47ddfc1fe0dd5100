// oct5 - exact maximum-weight induced bipartite subgraph solver for
// P5-free graphs, with a brute-force oracle, an instance generator, an
// independent report checker, and a self-test harness.
//
// Exit codes: 0 ok, 2 instance parse error, 3 class rejection,
// 4 size/cap/budget refusal, 5 selftest failure, 64 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oct/blob.hpp"
#include "oct/errors.hpp"
#include "oct/oracle.hpp"
#include "oct/report.hpp"
#include "oct/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitSize = 4;
constexpr int kExitSelftest = 5;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

oct::Instance load_instance(const std::string& path) {
    return oct::parse_instance(read_file(path));
}

void emit(const oct::Instance& inst, const oct::Solution& sol, const oct::SolveStats& stats,
          bool json) {
    oct::SolveReport report = oct::make_report(inst, sol, stats);
    if (json)
        std::cout << oct::report_to_json(report);
    else
        std::cout << oct::report_to_human(report);
}

int cmd_solve(const std::string& path, bool unchecked, std::uint64_t cap, bool json) {
    oct::Instance inst = load_instance(path);
    oct::SolveOptions options;
    options.class_check = !unchecked;
    options.blob_cap = cap;
    oct::SolveStats stats;
    oct::Solution sol;
    try {
        sol = oct::solve_oct(inst.graph, inst.weights, options, &stats);
    } catch (const oct::ClassRejection& e) {
        std::cerr << "class rejection; induced P5 (1-indexed):";
        for (int v : e.witness()) std::cerr << ' ' << v + 1;
        std::cerr << "\nrerun with --unchecked to waive the class check\n";
        return kExitClass;
    }
    emit(inst, sol, stats, json);
    return kExitOk;
}

int cmd_oracle(const std::string& path, bool json) {
    oct::Instance inst = load_instance(path);
    auto start = std::chrono::steady_clock::now();
    oct::Solution sol = oct::oct_brute(inst.graph, inst.weights);
    oct::SolveStats stats;  // solver stats stay zero for the oracle
    stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    emit(inst, sol, stats, json);
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& report_path) {
    oct::Instance inst = load_instance(instance_path);
    oct::VerifyResult vr = oct::verify_report(inst, read_file(report_path));
    if (vr.ok) {
        std::cout << "pass\n";
        return kExitOk;
    }
    std::cout << "fail: " << vr.violated << "\n";
    return 1;
}

int cmd_gen(int n, std::uint64_t seed, const std::string& model_name,
            const std::string& density_text, const std::string& out_path) {
    oct::GenModel model;
    model.n = n;
    model.seed = seed;
    model.density = oct::Rational::parse(density_text);
    if (model_name == "rejection")
        model.kind = oct::GenKind::rejection;
    else if (model_name == "substitution")
        model.kind = oct::GenKind::substitution;
    else if (model_name == "split-like" || model_name == "split")
        model.kind = oct::GenKind::split_like;
    else
        throw std::runtime_error("unknown model '" + model_name + "'");

    oct::Graph g = oct::gen_p5free(model);
    std::string text = oct::serialize_instance(g, oct::Weights::unit(g.vertex_count()));
    if (out_path.empty()) {
        std::cout << text;
        std::cerr << "P5-free: yes\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
        std::cout << "P5-free: yes\n";
    }
    return kExitOk;
}

int cmd_selftest(int max_n, int samples, std::uint64_t seed) {
    oct::SelftestOptions options;
    options.max_n = max_n;
    options.samples = samples;
    options.seed = seed;
    oct::SelftestSummary sum = oct::run_selftest(options, std::cout);
    return sum.ok() ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact odd cycle transversal on P5-free graphs (maximization form)"};
    app.require_subcommand(1);

    std::string path, report_path, out_path;
    bool unchecked = false, json = false;
    std::uint64_t cap = 50000, seed = 1;
    int n = 8, max_n = 5, samples = 20;
    std::string model = "substitution", density = "1/2";

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", path, "instance file")->required();
    solve->add_flag("--unchecked", unchecked, "skip the P5-freeness check");
    solve->add_option("--cap", cap, "blob vertex cap");
    solve->add_flag("--json", json, "machine-readable report");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solver (n <= 20)");
    oracle->add_option("file", path, "instance file")->required();
    oracle->add_flag("--json", json, "machine-readable report");

    auto* verify = app.add_subcommand("verify", "recheck a report against its instance");
    verify->add_option("instance", path, "instance file")->required();
    verify->add_option("report", report_path, "JSON report file")->required();

    auto* gen = app.add_subcommand("gen", "generate a certified P5-free instance");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--model", model, "rejection | substitution | split-like");
    gen->add_option("--density", density, "edge density (rational or decimal)");
    gen->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* selftest = app.add_subcommand("selftest", "oracle-equivalence sweep");
    selftest->add_option("--max-n", max_n, "exhaustive sweep bound (<= 7)");
    selftest->add_option("--samples", samples, "generated mid-size instances");
    selftest->add_option("--seed", seed, "sweep seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(path, unchecked, cap, json);
        if (oracle->parsed()) return cmd_oracle(path, json);
        if (verify->parsed()) return cmd_verify(path, report_path);
        if (gen->parsed()) return cmd_gen(n, seed, model, density, out_path);
        if (selftest->parsed()) return cmd_selftest(max_n, samples, seed);
    } catch (const oct::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const oct::SizeLimitError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitSize;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
