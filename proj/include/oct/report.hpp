#pragma once

#include <string>
#include <vector>

#include "oct/blob.hpp"
#include "oct/instance_io.hpp"
#include "oct/solution.hpp"

namespace oct {

// Machine-readable result. All vertex lists are 1-indexed (file ids) and
// sorted ascending. The JSON rendering is byte-stable for identical inputs
// and flags; wall-clock time is therefore reported only in the
// human-readable rendering and pinned to 0 in JSON.
struct SolveReport {
    int schema = 1;
    Rational weight;
    std::vector<int> vertices;
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> deleted;              // the odd cycle transversal itself
    std::vector<std::vector<int>> parts;   // chosen non-touching parts
    std::vector<std::string> flags;        // "p5free-certified" | "unverified-class"
    SolveStats stats;
};

SolveReport make_report(const Instance& instance, const Solution& solution,
                        const SolveStats& stats);

std::string report_to_json(const SolveReport& report);
std::string report_to_human(const SolveReport& report);

struct VerifyResult {
    bool ok = true;
    std::string violated;  // empty when ok; names the failed condition
};

// Rechecks a report against its instance using only direct adjacency
// scans and weight arithmetic; shares no code path with the solver.
VerifyResult verify_report(const Instance& instance, const std::string& report_json);

}  // namespace oct
