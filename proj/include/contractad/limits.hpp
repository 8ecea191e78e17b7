#ifndef CONTRACTAD_LIMITS_HPP
#define CONTRACTAD_LIMITS_HPP

namespace contractad {

// Size budgets for the exhaustive algorithms. Every budget below is a
// default; the CLI exposes a flag to override each one. The constants cap
// vertex counts unless noted otherwise.
struct Limits {
    int graph_partitions = 10;  // partition enumeration (Bell-like growth)
    int chromatic = 12;         // deletion-contraction recursion
    int hamiltonian = 16;       // path/cycle backtracking and subset DP
    int planeq_sweep = 9;       // n!-filter for PlanEq / CycEq counts
    int planeq_dp = 12;         // subset DP for PlanEq counts
    int star_product = 7;       // full partition sum in the *-product
    int koszul = 6;             // Koszul complex construction
    int multipartite = 12;      // k + |lambda| in the closed-form counts
    int young_weight = 8;       // truncation weight of Young series
    int series_order = 64;      // univariate series order
    int enumerate_graphs = 7;   // all labeled connected graphs on n vertices
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

} // namespace contractad

#endif
