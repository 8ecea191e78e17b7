#ifndef CONTRACTAD_VERIFY_HPP
#define CONTRACTAD_VERIFY_HPP

#include "contractad/graphic_functions.hpp"

#include <string>
#include <vector>

namespace contractad {

struct IdentityFailure {
    int n = 0;
    std::string edge_list;  // offending graph
    IdentityCheck check;
};

struct GraphOutcome {
    int n = 0;
    std::string edge_list;
    bool pass = true;
};

struct SweepResult {
    long long graphs_checked = 0;
    long long checks_run = 0;
    std::vector<IdentityFailure> failures;  // capped
    std::vector<GraphOutcome> per_graph;    // filled only on request
    bool all_pass() const { return failures.empty(); }
};

/// Runs the identity sweep over every labeled connected graph with up to
/// min(max_n, 6) vertices, plus a seeded random sample at n = 7 when
/// max_n >= 7 (or the full 2^21 sweep when full_n7 is set). `which` selects
/// identities by name; empty means all.
SweepResult sweep_identities(int max_n, const std::vector<std::string>& which = {}, int jobs = 0,
                             int sample_n7 = 1000, unsigned seed = 1, bool full_n7 = false,
                             std::size_t max_failures = 25, bool record_per_graph = false);

} // namespace contractad

#endif
