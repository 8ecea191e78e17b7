#include "contractad/planeq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace contractad {

namespace {

void check_permutation_of_vertices(const Graph& g, const DirectedSequence& tuple) {
    if (static_cast<int>(tuple.size()) != g.n)
        throw std::invalid_argument("tuple length must equal the vertex count");
    VertexSet seen = 0;
    for (int v : tuple) {
        if (v < 0 || v >= g.n || ((seen >> v) & 1))
            throw std::invalid_argument("tuple is not a permutation of the vertex set");
        seen |= VertexSet(1) << v;
    }
}

// Blocks of a partially merged tuple; two blocks touch iff some original
// edge crosses them.
inline bool blocks_adjacent(const Graph& g, VertexSet a, VertexSet b) {
    VertexSet reach = 0;
    for (VertexSet s = a; s;) {
        int v = lowest_vertex(s);
        s &= s - 1;
        reach |= g.adj[v];
    }
    return (reach & b) != 0;
}

bool merge_to_one_block(const Graph& g, std::vector<VertexSet> blocks, bool cyclic) {
    while (blocks.size() > 1) {
        std::size_t m = blocks.size();
        std::size_t found = m;
        for (std::size_t i = 0; i < (cyclic ? m : m - 1); ++i) {
            if (blocks_adjacent(g, blocks[i], blocks[(i + 1) % m])) {
                found = i;
                break;
            }
        }
        if (found == m) return false;
        blocks[found] |= blocks[(found + 1) % m];
        blocks.erase(blocks.begin() + ((found + 1) % m));
    }
    return true;
}

} // namespace

bool is_planeq(const Graph& g, const DirectedSequence& tuple) {
    if (!is_connected(g)) throw std::invalid_argument("is_planeq: graph must be connected");
    check_permutation_of_vertices(g, tuple);
    std::vector<VertexSet> blocks;
    blocks.reserve(tuple.size());
    for (int v : tuple) blocks.push_back(VertexSet(1) << v);
    return merge_to_one_block(g, std::move(blocks), /*cyclic=*/false);
}

bool is_cyceq(const Graph& g, const CyclicSequence& tuple) {
    if (!is_connected(g)) throw std::invalid_argument("is_cyceq: graph must be connected");
    check_permutation_of_vertices(g, tuple.rep);
    std::vector<VertexSet> blocks;
    blocks.reserve(tuple.rep.size());
    for (int v : tuple.rep) blocks.push_back(VertexSet(1) << v);
    return merge_to_one_block(g, std::move(blocks), /*cyclic=*/true);
}

std::vector<DirectedSequence> planeq_tuples(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("planeq_tuples: vertex count exceeds limit " + std::to_string(limit));
    if (!is_connected(g)) throw std::invalid_argument("planeq_tuples: graph must be connected");
    std::vector<DirectedSequence> out;
    DirectedSequence perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_planeq(g, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

long long planeq_count_dp(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("planeq_count_dp: vertex count exceeds limit " + std::to_string(limit));
    if (!is_connected(g)) throw std::invalid_argument("planeq_count_dp: graph must be connected");
    if (g.n == 1) return 1;
    // State: ordered blocks of the fully merged prefix (consecutive blocks
    // never adjacent). Appending a vertex opens a new block which cascades
    // into its left neighbours while they touch.
    using State = std::vector<VertexSet>;
    std::map<State, long long> frontier;
    frontier[{}] = 1;
    for (int step = 0; step < g.n; ++step) {
        std::map<State, long long> next;
        for (const auto& [state, ways] : frontier) {
            VertexSet used = 0;
            for (VertexSet b : state) used |= b;
            VertexSet free = g.vertex_mask() & ~used;
            while (free) {
                int v = lowest_vertex(free);
                free &= free - 1;
                State s = state;
                s.push_back(VertexSet(1) << v);
                while (s.size() >= 2 && blocks_adjacent(g, s[s.size() - 2], s.back())) {
                    s[s.size() - 2] |= s.back();
                    s.pop_back();
                }
                next[std::move(s)] += ways;
            }
        }
        frontier = std::move(next);
    }
    long long total = 0;
    for (const auto& [state, ways] : frontier)
        if (state.size() == 1) total += ways;
    return total;
}

long long planeq_count(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("planeq_count: vertex count exceeds limit " + std::to_string(limit));
    if (g.n <= default_limits().planeq_sweep)
        return static_cast<long long>(planeq_tuples(g).size());
    return planeq_count_dp(g, limit);
}

std::vector<CyclicSequence> cyceq_tuples(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("cyceq_tuples: vertex count exceeds limit " + std::to_string(limit));
    if (!is_connected(g)) throw std::invalid_argument("cyceq_tuples: graph must be connected");
    std::vector<CyclicSequence> out;
    if (g.n == 1) {
        out.push_back(CyclicSequence{{0}});
        return out;
    }
    // Canonical representatives start at vertex 0.
    DirectedSequence rest(g.n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        CyclicSequence c;
        c.rep.push_back(0);
        c.rep.insert(c.rep.end(), rest.begin(), rest.end());
        if (is_cyceq(g, c)) out.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

long long cyceq_count(const Graph& g, int limit) {
    return static_cast<long long>(cyceq_tuples(g, limit).size());
}

bool is_separable(const Pattern& sigma) {
    std::vector<int> s = sigma;
    while (s.size() > 1) {
        std::size_t pos = s.size();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (std::abs(s[i] - s[i + 1]) == 1) {
                pos = i;
                break;
            }
        }
        if (pos == s.size()) return false;
        int kept = std::min(s[pos], s[pos + 1]);
        s.erase(s.begin() + pos + 1);
        s[pos] = kept;
        for (int& x : s)
            if (x > kept + 1) --x;
    }
    return true;
}

namespace {

bool embeds_from(const Pattern& sigma, const Pattern& tau, std::size_t si, std::size_t ti,
                 std::vector<int>& chosen) {
    if (ti == tau.size()) {
        for (std::size_t l = 0; l < tau.size(); ++l)
            for (std::size_t r = l + 1; r < tau.size(); ++r)
                if ((chosen[l] < chosen[r]) != (tau[l] < tau[r])) return false;
        return true;
    }
    if (sigma.size() - si < tau.size() - ti) return false;
    for (std::size_t i = si; i < sigma.size(); ++i) {
        chosen[ti] = sigma[i];
        if (embeds_from(sigma, tau, i + 1, ti + 1, chosen)) return true;
    }
    return false;
}

} // namespace

bool contains_pattern(const Pattern& sigma, const Pattern& tau) {
    if (tau.size() > sigma.size()) return false;
    std::vector<int> chosen(tau.size());
    return embeds_from(sigma, tau, 0, 0, chosen);
}

std::vector<Pattern> avoider_list(int n, const std::vector<Pattern>& patterns, int limit) {
    if (n > limit) throw budget_error("avoiders: n exceeds limit " + std::to_string(limit));
    if (n < 1) throw std::invalid_argument("avoiders: n must be >= 1");
    std::vector<Pattern> out;
    Pattern perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (const Pattern& p : patterns)
            if (contains_pattern(perm, p)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

long long avoiders(int n, const std::vector<Pattern>& patterns, int limit) {
    return static_cast<long long>(avoider_list(n, patterns, limit).size());
}

std::vector<Pattern> b_p_patterns() {
    return {{2, 4, 1, 3}, {3, 1, 4, 2}};
}

std::vector<Pattern> b_c_patterns() {
    std::vector<Pattern> out;
    Pattern perm{1, 2, 3, 4, 5};
    do {
        bool ok = true;
        for (int k = 0; k + 1 < 5; ++k) {
            int diff = ((perm[k] - perm[k + 1]) % 5 + 5) % 5;
            if (diff != 2 && diff != 3) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace contractad
