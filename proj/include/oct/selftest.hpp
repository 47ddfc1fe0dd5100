#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace oct {

struct SelftestOptions {
    int max_n = 5;        // exhaustive sweep over all labeled graphs up to this size
    int samples = 20;     // generated mid-size instances (8 <= n <= 14)
    std::uint64_t seed = 1;
};

struct SelftestSummary {
    std::uint64_t exhaustive_graphs = 0;   // P5-free graphs swept
    std::uint64_t random_graphs = 0;
    std::uint64_t solves = 0;
    std::uint64_t mismatches = 0;          // solver weight != brute-force weight
    std::uint64_t verify_failures = 0;     // reports rejected by the independent checker
    std::uint64_t max_family_raw = 0;
    std::uint64_t max_blob_vertices = 0;
    bool ok() const { return mismatches == 0 && verify_failures == 0; }
};

// Oracle-equivalence sweep: every solve is compared against oct_brute for
// exact weight equality, and every report against verify_report. Failing
// instances are serialized into `log`.
SelftestSummary run_selftest(const SelftestOptions& options, std::ostream& log);

}  // namespace oct
