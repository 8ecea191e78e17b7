#ifndef CONTRACTAD_PLANEQ_HPP
#define CONTRACTAD_PLANEQ_HPP

#include "contractad/hamiltonian.hpp"

#include <vector>

namespace contractad {

// Permutation of 1..k, the pattern-avoidance convention.
using Pattern = DirectedSequence;

/// True iff the tuple is realizable by a graph-admissible planar binary
/// tree. Greedy test: contract the first adjacent consecutive pair and
/// recurse; any-pair and first-pair choices agree.
bool is_planeq(const Graph& g, const DirectedSequence& tuple);

/// Cyclic counterpart on rotation classes.
bool is_cyceq(const Graph& g, const CyclicSequence& tuple);

/// |PlanEq(g)|: n!-filter for small n, subset DP over contracted prefix
/// states beyond that.
long long planeq_count(const Graph& g, int limit = default_limits().planeq_dp);

/// The DP route on its own (used to cross-check the filter count).
long long planeq_count_dp(const Graph& g, int limit = default_limits().planeq_dp);

std::vector<DirectedSequence> planeq_tuples(const Graph& g, int limit = default_limits().planeq_sweep);

/// |CycEq(g)| and the class list, by (n-1)!-filter over canonical
/// representatives.
long long cyceq_count(const Graph& g, int limit = default_limits().planeq_sweep);

std::vector<CyclicSequence> cyceq_tuples(const Graph& g, int limit = default_limits().planeq_sweep);

/// The three-step merge test for separable permutations: find the first i
/// with |s_i - s_{i+1}| = 1, merge to the minimum, renormalize, recurse.
bool is_separable(const Pattern& sigma);

/// Order-isomorphic subsequence test (brute force).
bool contains_pattern(const Pattern& sigma, const Pattern& tau);

/// |Av_n(patterns)| by filtering all n! permutations.
long long avoiders(int n, const std::vector<Pattern>& patterns,
                   int limit = default_limits().planeq_sweep);

std::vector<Pattern> avoider_list(int n, const std::vector<Pattern>& patterns,
                                  int limit = default_limits().planeq_sweep);

/// {2413, 3142}: the forbidden patterns of separable permutations.
std::vector<Pattern> b_p_patterns();

/// The ten 5-permutations with all cyclic-consecutive differences = +-2
/// mod 5; the forbidden patterns for tuples realizable on cycle graphs.
std::vector<Pattern> b_c_patterns();

} // namespace contractad

#endif
