#include "contractad/koszul.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace contractad {

long long RationalChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < basis.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(basis[d].size());
    return chi;
}

namespace {

using Cutset = std::uint32_t;  // merged positions, bit i-1 <-> position i

std::string join_blocks(const DirectedSequence& tuple, const std::vector<int>& cuts, bool cyclic,
                        int n) {
    // cuts are the positions where consecutive blocks split, ascending.
    std::ostringstream out;
    if (cyclic) out << "|";
    if (cuts.empty()) {
        for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
    } else if (!cyclic) {
        int prev = 0;
        std::vector<int> all = cuts;
        all.push_back(n);
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (b) out << "|";
            for (int i = prev + 1; i <= all[b]; ++i) out << (i > prev + 1 ? "," : "") << tuple[i - 1];
            prev = all[b];
        }
    } else {
        // canonical block order: the block ending at the first cut comes
        // first; it starts after the last cut (wrapping through index 1)
        int k = static_cast<int>(cuts.size());
        for (int b = 0; b < k; ++b) {
            if (b) out << "|";
            int from = cuts[(b + k - 1) % k] % n + 1;  // index after the previous cut
            int to = cuts[b];
            for (int i = from;; i = i % n + 1) {
                out << (i != from ? "," : "") << tuple[i - 1];
                if (i == to) break;
            }
        }
    }
    if (cyclic) out << "|";
    return out.str();
}

struct Builder {
    int n = 0;
    RationalChainComplex complex;
    // per degree: (tuple index, merged-position set) -> basis index
    std::vector<std::map<std::pair<std::size_t, Cutset>, std::size_t>> index;

    void init(int vertices) {
        n = vertices;
        complex.basis.assign(n, {});
        complex.differentials.assign(n, {});
        index.assign(n, {});
    }

    std::size_t add(std::size_t degree, std::size_t tuple_idx, Cutset merged, std::string label) {
        auto& names = complex.basis[degree];
        names.push_back(std::move(label));
        index[degree][{tuple_idx, merged}] = names.size() - 1;
        return names.size() - 1;
    }

    std::size_t at(std::size_t degree, std::size_t tuple_idx, Cutset merged) const {
        return index[degree].at({tuple_idx, merged});
    }
};

std::vector<int> cut_positions(Cutset merged, int max_position) {
    std::vector<int> cuts;
    for (int p = 1; p <= max_position; ++p)
        if (!((merged >> (p - 1)) & 1)) cuts.push_back(p);
    return cuts;
}

// Positions p with tuple[p-1] adjacent to tuple[p mod n] (cyclic includes
// the wrap position n).
Cutset adjacency_positions(const Graph& g, const DirectedSequence& tuple, bool cyclic) {
    int n = static_cast<int>(tuple.size());
    Cutset e = 0;
    int top = cyclic ? n : n - 1;
    for (int p = 1; p <= top; ++p)
        if (g.has_edge(tuple[p - 1], tuple[p % n])) e |= Cutset(1) << (p - 1);
    return e;
}

RationalChainComplex build_linear(const Graph& g, const std::vector<DirectedSequence>& tuples) {
    Builder b;
    b.init(g.n);
    // basis: every splitting of every tuple, i.e. every subset of the
    // tuple's adjacent positions marked as merged
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Cutset positions = adjacency_positions(g, tuples[t], false);
        for (Cutset merged = positions;; merged = (merged - 1) & positions) {
            int degree = g.n - 1 - popcount(merged);
            b.add(degree, t, merged, join_blocks(tuples[t], cut_positions(merged, g.n - 1), false, g.n));
            if (merged == 0) break;
        }
    }
    // subsets were emitted high-to-low; per-degree order should be
    // (tuple, merged-set) ascending
    for (int d = 0; d < g.n; ++d) {
        std::vector<std::pair<std::pair<std::size_t, Cutset>, std::string>> items;
        for (const auto& [key, idx] : b.index[d]) items.push_back({key, b.complex.basis[d][idx]});
        std::sort(items.begin(), items.end());
        b.complex.basis[d].clear();
        b.index[d].clear();
        for (auto& [key, label] : items) b.add(d, key.first, key.second, std::move(label));
    }
    // differential: merge blocks l and l+1 (remove the l-th cut) with sign
    // (-1)^(l-1)
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Cutset positions = adjacency_positions(g, tuples[t], false);
        for (Cutset merged = positions;; merged = (merged - 1) & positions) {
            int degree = g.n - 1 - popcount(merged);
            if (degree >= 1) {
                std::size_t col = b.at(degree, t, merged);
                std::vector<int> cuts = cut_positions(merged, g.n - 1);
                for (std::size_t l = 0; l < cuts.size(); ++l) {
                    Cutset bit = Cutset(1) << (cuts[l] - 1);
                    if (!(positions & bit)) continue;
                    std::size_t row = b.at(degree - 1, t, merged | bit);
                    Rational sign = (l % 2 == 0) ? 1 : -1;
                    b.complex.differentials[degree].push_back({row, col, sign});
                }
            }
            if (merged == 0) break;
        }
    }
    return b.complex;
}

RationalChainComplex build_cyclic(const Graph& g, const std::vector<CyclicSequence>& tuples) {
    Builder b;
    b.init(g.n);
    Cutset full = (g.n == 32) ? ~Cutset(0) : ((Cutset(1) << g.n) - 1);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Cutset positions = adjacency_positions(g, tuples[t].rep, true);
        for (Cutset merged = positions;; merged = (merged - 1) & positions) {
            if (merged != full) {
                int degree = g.n - 1 - popcount(merged);
                b.add(degree, t, merged,
                      join_blocks(tuples[t].rep, cut_positions(merged, g.n), true, g.n));
            }
            if (merged == 0) break;
        }
    }
    for (int d = 0; d < g.n; ++d) {
        std::vector<std::pair<std::pair<std::size_t, Cutset>, std::string>> items;
        for (const auto& [key, idx] : b.index[d]) items.push_back({key, b.complex.basis[d][idx]});
        std::sort(items.begin(), items.end());
        b.complex.basis[d].clear();
        b.index[d].clear();
        for (auto& [key, label] : items) b.add(d, key.first, key.second, std::move(label));
    }
    // Blocks in canonical order (the block containing the representative's
    // first vertex comes first) leave every merge result canonical, so the
    // rotation sign rule never fires here: merging at the l-th cut carries
    // (-1)^(l-1), the wrap merge being l = k.
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Cutset positions = adjacency_positions(g, tuples[t].rep, true);
        for (Cutset merged = positions;; merged = (merged - 1) & positions) {
            int degree = g.n - 1 - popcount(merged);
            if (merged != full && degree >= 1) {
                std::size_t col = b.at(degree, t, merged);
                std::vector<int> cuts = cut_positions(merged, g.n);
                for (std::size_t l = 0; l < cuts.size(); ++l) {
                    Cutset bit = Cutset(1) << (cuts[l] - 1);
                    if (!(positions & bit)) continue;
                    if ((merged | bit) == full) continue;  // a single block cannot wrap-merge
                    std::size_t row = b.at(degree - 1, t, merged | bit);
                    Rational sign = (l % 2 == 0) ? 1 : -1;
                    b.complex.differentials[degree].push_back({row, col, sign});
                }
            }
            if (merged == 0) break;
        }
    }
    return b.complex;
}

void check_koszul_budget(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("koszul: vertex count exceeds limit " + std::to_string(limit));
    if (!is_connected(g)) throw std::invalid_argument("koszul: graph must be connected");
}

} // namespace

RationalChainComplex build_ham_koszul(const Graph& g, int limit) {
    check_koszul_budget(g, limit);
    return build_linear(g, planeq_tuples(g));
}

RationalChainComplex ham_koszul_component(const Graph& g, const DirectedSequence& tuple) {
    if (!is_planeq(g, tuple)) throw std::invalid_argument("tuple is not realizable on this graph");
    return build_linear(g, {tuple});
}

RationalChainComplex build_cycham_koszul(const Graph& g, int limit) {
    check_koszul_budget(g, limit);
    return build_cyclic(g, cyceq_tuples(g));
}

RationalChainComplex cycham_koszul_component(const Graph& g, const CyclicSequence& tuple) {
    if (!is_cyceq(g, tuple)) throw std::invalid_argument("cyclic tuple is not realizable on this graph");
    return build_cyclic(g, {tuple});
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

SparseRow combine(const SparseRow& a, const SparseRow& b, const Rational& factor) {
    // a + factor * b
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, factor * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + factor * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols) {
    // Rows bucketed by leading column; eliminate column by column.
    std::vector<std::vector<SparseRow>> bucket(ncols);
    for (auto& r : rows)
        if (!r.empty()) bucket[r.front().first].push_back(std::move(r));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        auto& rows_here = bucket[c];
        if (rows_here.empty()) continue;
        // shortest row as pivot keeps fill-in low
        std::size_t piv = 0;
        for (std::size_t i = 1; i < rows_here.size(); ++i)
            if (rows_here[i].size() < rows_here[piv].size()) piv = i;
        SparseRow pivot = std::move(rows_here[piv]);
        rows_here.erase(rows_here.begin() + piv);
        ++rank;
        Rational lead = pivot.front().second;
        for (auto& r : rows_here) {
            SparseRow reduced = combine(r, pivot, -r.front().second / lead);
            if (!reduced.empty()) bucket[reduced.front().first].push_back(std::move(reduced));
        }
        rows_here.clear();
    }
    return rank;
}

std::vector<SparseRow> rows_of(const RationalChainComplex& complex, std::size_t degree) {
    // row index = degree-1 basis element; columns = degree basis
    std::vector<SparseRow> rows(complex.dim(degree - 1));
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cells(complex.dim(degree - 1));
    for (const auto& e : complex.differentials[degree]) cells[e.row].emplace_back(e.col, e.value);
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::sort(cells[r].begin(), cells[r].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows[r] = std::move(cells[r]);
    }
    return rows;
}

} // namespace

bool RationalChainComplex::differential_squares_to_zero() const {
    for (std::size_t d = 2; d < degrees(); ++d) {
        // columns of d as sparse vectors
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(dim(d));
        for (const auto& e : differentials[d]) cols[e.col].emplace_back(e.row, e.value);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> lower(dim(d - 1));
        for (const auto& e : differentials[d - 1]) lower[e.col].emplace_back(e.row, e.value);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::map<std::size_t, Rational> acc;
            for (const auto& [mid, v1] : cols[c])
                for (const auto& [row, v2] : lower[mid]) acc[row] += v1 * v2;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

std::size_t differential_rank(const RationalChainComplex& complex, std::size_t degree) {
    if (degree < 1 || degree >= complex.degrees() || complex.dim(degree) == 0 ||
        complex.dim(degree - 1) == 0)
        return 0;
    return sparse_rank(rows_of(complex, degree), complex.dim(degree));
}

std::vector<long long> homology_ranks(const RationalChainComplex& complex) {
    if (!complex.differential_squares_to_zero())
        throw std::invalid_argument("homology_ranks: differential does not square to zero");
    std::size_t top = complex.degrees();
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t d = 1; d < top; ++d) ranks[d] = differential_rank(complex, d);
    std::vector<long long> betti(top, 0);
    for (std::size_t d = 0; d < top; ++d)
        betti[d] = static_cast<long long>(complex.dim(d)) - static_cast<long long>(ranks[d]) -
                   static_cast<long long>(d + 1 <= top ? ranks[d + 1] : 0);
    return betti;
}

std::string dump_matrices(const RationalChainComplex& complex) {
    std::ostringstream out;
    for (std::size_t d = 1; d < complex.degrees(); ++d)
        for (const auto& e : complex.differentials[d])
            out << d << " " << e.row << " " << e.col << " " << e.value.str() << "\n";
    return out.str();
}

} // namespace contractad
