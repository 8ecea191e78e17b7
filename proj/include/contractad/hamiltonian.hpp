#ifndef CONTRACTAD_HAMILTONIAN_HPP
#define CONTRACTAD_HAMILTONIAN_HPP

#include "contractad/graph.hpp"

#include <optional>
#include <vector>

namespace contractad {

// Ordered tuple of distinct vertex labels. Used for directed Hamiltonian
// paths, realizable tuples, and (1-based) permutation patterns.
using DirectedSequence = std::vector<int>;

/// Rotation class of a directed cycle; the stored representative starts at
/// the smallest label.
struct CyclicSequence {
    DirectedSequence rep;

    CyclicSequence() = default;
    /// Canonicalizes an arbitrary representative.
    explicit CyclicSequence(DirectedSequence any_rotation);

    int size() const { return static_cast<int>(rep.size()); }
    bool operator==(const CyclicSequence& other) const { return rep == other.rep; }
    bool operator<(const CyclicSequence& other) const { return rep < other.rep; }
};

bool is_hamiltonian_path(const Graph& g, const DirectedSequence& p);

/// Hamiltonian cycle test under the small-graph conventions: every 1-vertex
/// graph has the loop, a connected 2-vertex graph has one cycle, n >= 3
/// requires the wrap edge.
bool is_hamiltonian_cycle(const Graph& g, const CyclicSequence& c);

/// All directed Hamiltonian paths in lexicographic order.
std::vector<DirectedSequence> ham_paths(const Graph& g, int limit = default_limits().hamiltonian);

/// All directed Hamiltonian cycles as canonical rotation classes, in
/// lexicographic order of the representative.
std::vector<CyclicSequence> ham_cycles(const Graph& g, int limit = default_limits().hamiltonian);

/// Number of directed Hamiltonian paths, by subset-endpoint DP. Works on
/// disconnected graphs (where it returns 0 for n >= 2).
long long hp_count(const Graph& g, int limit = default_limits().hamiltonian);

/// Number of directed Hamiltonian cycles with the conventions above.
long long hc_count(const Graph& g, int limit = default_limits().hamiltonian);

/// Splice a Hamiltonian path of induced(g, tube) into the tube's slot in a
/// Hamiltonian path of contract(g, {tube} + singletons). Returns the spliced
/// path when both junction adjacencies hold in g, std::nullopt otherwise
/// (the zero of the linearized substitution).
std::optional<DirectedSequence> substitute_path(const Graph& g, VertexSet tube,
                                                const DirectedSequence& outer,
                                                const DirectedSequence& inner);

/// Cyclic variant: outer is a Hamiltonian cycle of the contracted graph;
/// junction adjacency wraps around.
std::optional<CyclicSequence> substitute_cycle(const Graph& g, VertexSet tube,
                                               const CyclicSequence& outer,
                                               const DirectedSequence& inner);

/// Extend a Hamiltonian path to the unique directed Hamiltonian cycle when
/// its endpoints are adjacent (always for n <= 2 on connected graphs).
std::optional<CyclicSequence> extend_path_to_cycle(const Graph& g, const DirectedSequence& p);

/// (-1)^n * chi_g(-1), the number of acyclic orientations.
Int acyclic_orientation_count(const Graph& g, int limit = default_limits().chromatic);

} // namespace contractad

#endif
