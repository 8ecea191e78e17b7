#ifndef CONTRACTAD_GRAPH_HPP
#define CONTRACTAD_GRAPH_HPP

#include "contractad/limits.hpp"
#include "contractad/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace contractad {

// Vertex subsets are bitmasks over the dense labels 0..n-1.
using VertexSet = std::uint32_t;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctz(s); }

/// Labeled simple undirected graph on vertices 0..n-1.
/// Equality is label-sensitive; there is no isomorphism machinery here.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;  // adj[v] = bitmask of neighbours of v

    Graph() = default;
    explicit Graph(int vertices);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    VertexSet vertex_mask() const {
        return n == 32 ? ~VertexSet(0) : ((VertexSet(1) << n) - 1);
    }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
    bool operator!=(const Graph& other) const { return !(*this == other); }
};

// Blocks are pairwise-disjoint tubes covering the vertex set, listed in
// increasing order of their smallest vertex.
using GraphPartition = std::vector<VertexSet>;

/// Polynomial in q with exact integer coefficients, lowest degree first.
struct IntPolynomial {
    std::vector<Int> coeffs;

    Int eval(const Int& q) const;
    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    bool operator==(const IntPolynomial& other) const;
    std::string to_string() const;  // e.g. "q^3 - 3q^2 + 2q"
};

// -- connectivity and subgraph calculus --------------------------------------

/// True iff g has exactly one connected component. The empty graph is not
/// connected.
bool is_connected(const Graph& g);

/// Connected component (as a bitmask) of the subgraph induced on `within`
/// containing `start`.
VertexSet component_of(const Graph& g, VertexSet within, int start);

/// True iff s is non-empty and induces a connected subgraph.
bool is_tube(const Graph& g, VertexSet s);

/// All tubes of a connected graph, ordered by (size, bitmask value).
std::vector<VertexSet> tubes(const Graph& g);

/// Induced subgraph on s, relabeled 0..|s|-1 preserving label order.
Graph induced(const Graph& g, VertexSet s);

/// Vertices of induced(g, s) in terms of original labels (sorted).
std::vector<int> vertices_of(VertexSet s);

/// Throws std::invalid_argument unless p is a partition of V(g) into tubes.
void validate_partition(const Graph& g, const GraphPartition& p);

/// Contract each block of p to a single vertex. Blocks are relabeled
/// 0..k-1 by their smallest original vertex; two blocks are adjacent iff
/// their union is a tube of g (equivalently, iff some edge crosses them).
Graph contract(const Graph& g, const GraphPartition& p);

/// As contract(), also reporting the block carried by each new label.
std::pair<Graph, GraphPartition> contract_with_blocks(const Graph& g, const GraphPartition& p);

/// The one-tube contraction g/G: G collapses, all other vertices stay.
std::pair<Graph, GraphPartition> contract_tube(const Graph& g, VertexSet tube);

/// Every partition of V(g) into tubes, passed to fn in a deterministic
/// order. Requires g connected and n within the stated limit.
void for_each_graph_partition(const Graph& g, const std::function<void(const GraphPartition&)>& fn,
                              int limit = default_limits().graph_partitions);

std::vector<GraphPartition> graph_partitions(const Graph& g,
                                             int limit = default_limits().graph_partitions);

/// Complement graph on the same labels.
Graph complement(const Graph& g);

/// Exact chromatic polynomial. Works for arbitrary (also disconnected)
/// graphs via deletion-contraction with memoization; dense graphs switch to
/// addition-contraction toward the complete-graph base case.
IntPolynomial chromatic_polynomial(const Graph& g, int limit = default_limits().chromatic);

// -- named families -----------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);  // cycle_graph(1) = path_graph(1), cycle_graph(2) = path_graph(2)
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& lambda);
Graph empty_graph();

/// All labeled connected graphs on n vertices, in increasing edge-mask
/// order. n is capped (2^C(n,2) sweep).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn,
                              int limit = default_limits().enumerate_graphs);

std::size_t count_connected_graphs(int n, int limit = default_limits().enumerate_graphs);

// -- text formats -------------------------------------------------------------

/// Parses either the named-family grammar ("P5", "C6", "K4", "K2,2,1") or an
/// edge list ("n" on the first line, then "u v" lines with u < v).
Graph parse_graph(const std::string& spec);

/// Edge-list text form: first line n, then one "u v" line per edge.
std::string format_edge_list(const Graph& g);

/// Memoization key: n followed by the adjacency masks.
std::string graph_key(const Graph& g);

} // namespace contractad

#endif
