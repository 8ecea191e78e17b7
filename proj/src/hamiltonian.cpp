#include "contractad/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace contractad {

CyclicSequence::CyclicSequence(DirectedSequence any_rotation) {
    if (any_rotation.empty()) throw std::invalid_argument("cyclic sequence must be non-empty");
    auto it = std::min_element(any_rotation.begin(), any_rotation.end());
    rep.assign(it, any_rotation.end());
    rep.insert(rep.end(), any_rotation.begin(), it);
}

bool is_hamiltonian_path(const Graph& g, const DirectedSequence& p) {
    if (static_cast<int>(p.size()) != g.n || g.n == 0) return false;
    VertexSet seen = 0;
    for (int v : p) {
        if (v < 0 || v >= g.n || (seen >> v) & 1) return false;
        seen |= VertexSet(1) << v;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

bool is_hamiltonian_cycle(const Graph& g, const CyclicSequence& c) {
    if (!is_hamiltonian_path(g, c.rep)) return false;
    if (g.n <= 2) return true;  // loop [v] and the 2-vertex convention
    return g.has_edge(c.rep.back(), c.rep.front());
}

namespace {

void check_ham_budget(const Graph& g, int limit, const char* who) {
    if (g.n > limit) throw budget_error(std::string(who) + ": vertex count exceeds limit " + std::to_string(limit));
}

void extend_paths(const Graph& g, DirectedSequence& cur, VertexSet used,
                  std::vector<DirectedSequence>& out) {
    if (static_cast<int>(cur.size()) == g.n) {
        out.push_back(cur);
        return;
    }
    VertexSet candidates = g.adj[cur.back()] & ~used;
    while (candidates) {
        int v = lowest_vertex(candidates);
        candidates &= candidates - 1;
        cur.push_back(v);
        extend_paths(g, cur, used | (VertexSet(1) << v), out);
        cur.pop_back();
    }
}

} // namespace

std::vector<DirectedSequence> ham_paths(const Graph& g, int limit) {
    check_ham_budget(g, limit, "ham_paths");
    if (!is_connected(g)) throw std::invalid_argument("ham_paths: graph must be connected");
    std::vector<DirectedSequence> out;
    for (int start = 0; start < g.n; ++start) {
        DirectedSequence cur{start};
        extend_paths(g, cur, VertexSet(1) << start, out);
    }
    return out;
}

std::vector<CyclicSequence> ham_cycles(const Graph& g, int limit) {
    check_ham_budget(g, limit, "ham_cycles");
    if (!is_connected(g)) throw std::invalid_argument("ham_cycles: graph must be connected");
    std::vector<CyclicSequence> out;
    if (g.n == 1) {
        out.push_back(CyclicSequence{{0}});
        return out;
    }
    if (g.n == 2) {
        out.push_back(CyclicSequence{{0, 1}});
        return out;
    }
    // Representatives start at vertex 0; enumerate paths from 0 and keep
    // those whose last vertex closes up.
    DirectedSequence cur{0};
    std::vector<DirectedSequence> paths;
    extend_paths(g, cur, VertexSet(1) << 0, paths);
    for (const auto& p : paths)
        if (g.has_edge(p.back(), 0)) out.push_back(CyclicSequence{p});
    return out;
}

long long hp_count(const Graph& g, int limit) {
    check_ham_budget(g, limit, "hp_count");
    if (g.n == 0) return 0;
    if (g.n == 1) return 1;
    // table[S][v] = number of directed paths covering S and ending at v
    std::size_t size = std::size_t(1) << g.n;
    long long total = 0;
    std::vector<long long> empty_row(g.n, 0);
    std::vector<std::vector<long long>> table(size);
    for (int v = 0; v < g.n; ++v) {
        VertexSet s = VertexSet(1) << v;
        if (table[s].empty()) table[s] = empty_row;
        table[s][v] = 1;
    }
    for (VertexSet s = 1; s < size; ++s) {
        if (table[s].empty()) continue;
        for (int v = 0; v < g.n; ++v) {
            long long ways = table[s][v];
            if (!ways) continue;
            if (s == g.vertex_mask()) {
                total += ways;
                continue;
            }
            VertexSet next = g.adj[v] & ~s;
            while (next) {
                int w = lowest_vertex(next);
                next &= next - 1;
                VertexSet t = s | (VertexSet(1) << w);
                if (table[t].empty()) table[t] = empty_row;
                table[t][w] += ways;
            }
        }
    }
    return total;
}

long long hc_count(const Graph& g, int limit) {
    check_ham_budget(g, limit, "hc_count");
    if (g.n == 0) return 0;
    if (g.n == 1) return 1;
    if (g.n == 2) return is_connected(g) ? 1 : 0;
    if (!is_connected(g)) return 0;
    // Paths anchored at vertex 0 whose end closes up; each cycle class is
    // counted once since the representative is forced to start at 0.
    std::size_t size = std::size_t(1) << g.n;
    std::vector<std::vector<long long>> table(size);
    std::vector<long long> empty_row(g.n, 0);
    VertexSet start = 1;
    table[start] = empty_row;
    table[start][0] = 1;
    long long total = 0;
    for (VertexSet s = 1; s < size; ++s) {
        if (table[s].empty() || !(s & 1)) continue;
        for (int v = 0; v < g.n; ++v) {
            long long ways = table[s][v];
            if (!ways) continue;
            if (s == g.vertex_mask()) {
                if (g.has_edge(v, 0)) total += ways;
                continue;
            }
            VertexSet next = g.adj[v] & ~s;
            while (next) {
                int w = lowest_vertex(next);
                next &= next - 1;
                VertexSet t = s | (VertexSet(1) << w);
                if (table[t].empty()) table[t] = empty_row;
                table[t][w] += ways;
            }
        }
    }
    return total;
}

namespace {

struct SpliceParts {
    std::vector<int> expanded;  // spliced sequence in original labels
    int pred = -1;              // original vertex before the tube slot, -1 at the boundary
    int succ = -1;              // original vertex after the tube slot
    int first_inner = -1;
    int last_inner = -1;
};

// Shared expansion step: locate the tube's block in the outer sequence and
// replace it by the inner path mapped back to original labels.
SpliceParts expand(const Graph& g, VertexSet tube, const DirectedSequence& outer,
                   const DirectedSequence& inner, bool cyclic) {
    if (!is_tube(g, tube)) throw std::invalid_argument("substitute: set is not a tube");
    auto [contracted, blocks] = contract_tube(g, tube);
    if (!is_hamiltonian_path(contracted, outer))
        throw std::invalid_argument("substitute: outer sequence is not Hamiltonian in the contracted graph");
    Graph inner_graph = induced(g, tube);
    if (!is_hamiltonian_path(inner_graph, inner))
        throw std::invalid_argument("substitute: inner sequence is not Hamiltonian in the induced subgraph");

    int slot = -1;
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (blocks[outer[i]] == tube) slot = static_cast<int>(i);
    std::vector<int> members = vertices_of(tube);

    SpliceParts parts;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (static_cast<int>(i) == slot) {
            for (int w : inner) parts.expanded.push_back(members[w]);
        } else {
            parts.expanded.push_back(vertices_of(blocks[outer[i]])[0]);
        }
    }
    parts.first_inner = members[inner.front()];
    parts.last_inner = members[inner.back()];
    int k = static_cast<int>(outer.size());
    if (cyclic && k >= 2) {
        parts.pred = vertices_of(blocks[outer[(slot + k - 1) % k]])[0];
        parts.succ = vertices_of(blocks[outer[(slot + 1) % k]])[0];
    } else if (!cyclic) {
        if (slot > 0) parts.pred = vertices_of(blocks[outer[slot - 1]])[0];
        if (slot + 1 < k) parts.succ = vertices_of(blocks[outer[slot + 1]])[0];
    }
    return parts;
}

} // namespace

std::optional<DirectedSequence> substitute_path(const Graph& g, VertexSet tube,
                                                const DirectedSequence& outer,
                                                const DirectedSequence& inner) {
    SpliceParts parts = expand(g, tube, outer, inner, /*cyclic=*/false);
    if (parts.pred >= 0 && !g.has_edge(parts.pred, parts.first_inner)) return std::nullopt;
    if (parts.succ >= 0 && !g.has_edge(parts.last_inner, parts.succ)) return std::nullopt;
    return parts.expanded;
}

std::optional<CyclicSequence> substitute_cycle(const Graph& g, VertexSet tube,
                                               const CyclicSequence& outer,
                                               const DirectedSequence& inner) {
    auto contracted = contract_tube(g, tube).first;
    if (!is_hamiltonian_cycle(contracted, outer))
        throw std::invalid_argument("substitute: outer sequence is not a Hamiltonian cycle of the contracted graph");
    SpliceParts parts = expand(g, tube, outer.rep, inner, /*cyclic=*/true);
    if (parts.pred >= 0) {
        if (!g.has_edge(parts.pred, parts.first_inner)) return std::nullopt;
        if (!g.has_edge(parts.last_inner, parts.succ)) return std::nullopt;
    } else if (static_cast<int>(parts.expanded.size()) >= 2) {
        // The outer cycle was the loop on one block; the splice closes up
        // through the wrap edge of the inner path.
        if (static_cast<int>(parts.expanded.size()) >= 3 &&
            !g.has_edge(parts.last_inner, parts.first_inner))
            return std::nullopt;
    }
    return CyclicSequence{parts.expanded};
}

std::optional<CyclicSequence> extend_path_to_cycle(const Graph& g, const DirectedSequence& p) {
    if (!is_hamiltonian_path(g, p)) throw std::invalid_argument("extend_path_to_cycle: not a Hamiltonian path");
    if (g.n >= 3 && !g.has_edge(p.back(), p.front())) return std::nullopt;
    return CyclicSequence{p};
}

Int acyclic_orientation_count(const Graph& g, int limit) {
    IntPolynomial chi = chromatic_polynomial(g, limit);
    Int value = chi.eval(-1);
    return (g.n % 2 == 0) ? value : -value;
}

} // namespace contractad
