#include "contractad/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace contractad {

Graph::Graph(int vertices) : n(vertices), adj(vertices, 0) {
    if (vertices < 0 || vertices > 31) {
        throw std::invalid_argument("vertex count must be between 0 and 31");
    }
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-edges are not allowed");
    adj[u] |= VertexSet(1) << v;
    adj[v] |= VertexSet(1) << u;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += popcount(adj[v]);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Int IntPolynomial::eval(const Int& q) const {
    Int r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * q + coeffs[i];
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs.size() > coeffs.size()) coeffs.resize(other.coeffs.size());
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs.size() > coeffs.size()) coeffs.resize(other.coeffs.size());
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] -= other.coeffs[i];
    return *this;
}

bool IntPolynomial::operator==(const IntPolynomial& other) const {
    std::size_t m = std::max(coeffs.size(), other.coeffs.size());
    for (std::size_t i = 0; i < m; ++i) {
        Int a = i < coeffs.size() ? coeffs[i] : Int(0);
        Int b = i < other.coeffs.size() ? other.coeffs[i] : Int(0);
        if (a != b) return false;
    }
    return true;
}

std::string IntPolynomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        Int c = coeffs[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || i == 0) out << a.str();
        if (i >= 1) out << "q";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

VertexSet component_of(const Graph& g, VertexSet within, int start) {
    VertexSet seen = VertexSet(1) << start;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f) {
            int v = lowest_vertex(f);
            f &= f - 1;
            next |= g.adj[v] & within;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen & within;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return component_of(g, g.vertex_mask(), 0) == g.vertex_mask();
}

bool is_tube(const Graph& g, VertexSet s) {
    if (s == 0) return false;
    return component_of(g, s, lowest_vertex(s)) == s;
}

std::vector<VertexSet> tubes(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("tubes: graph must be connected");
    std::vector<VertexSet> out;
    VertexSet full = g.vertex_mask();
    for (VertexSet s = 1; s <= full; ++s)
        if (is_tube(g, s)) out.push_back(s);
    std::stable_sort(out.begin(), out.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });
    return out;
}

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(lowest_vertex(s));
        s &= s - 1;
    }
    return out;
}

Graph induced(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("induced: vertex set must be non-empty");
    if (s & ~g.vertex_mask()) throw std::invalid_argument("induced: vertex set out of range");
    std::vector<int> verts = vertices_of(s);
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

void validate_partition(const Graph& g, const GraphPartition& p) {
    VertexSet covered = 0;
    for (VertexSet block : p) {
        if (!is_tube(g, block)) throw std::invalid_argument("partition block is not a tube");
        if (covered & block) throw std::invalid_argument("partition blocks overlap");
        covered |= block;
    }
    if (covered != g.vertex_mask()) throw std::invalid_argument("partition does not cover the vertex set");
}

std::pair<Graph, GraphPartition> contract_with_blocks(const Graph& g, const GraphPartition& p) {
    validate_partition(g, p);
    GraphPartition blocks = p;
    std::sort(blocks.begin(), blocks.end(),
              [](VertexSet a, VertexSet b) { return lowest_vertex(a) < lowest_vertex(b); });
    int k = static_cast<int>(blocks.size());
    Graph out(k);
    for (int i = 0; i < k; ++i) {
        VertexSet reach = 0;
        for (int v : vertices_of(blocks[i])) reach |= g.adj[v];
        for (int j = i + 1; j < k; ++j) {
            // Blocks are tubes, so their union is a tube iff an edge crosses.
            if (reach & blocks[j]) out.add_edge(i, j);
        }
    }
    return {out, blocks};
}

Graph contract(const Graph& g, const GraphPartition& p) {
    return contract_with_blocks(g, p).first;
}

std::pair<Graph, GraphPartition> contract_tube(const Graph& g, VertexSet tube) {
    GraphPartition p;
    p.push_back(tube);
    VertexSet rest = g.vertex_mask() & ~tube;
    for (int v : vertices_of(rest)) p.push_back(VertexSet(1) << v);
    return contract_with_blocks(g, p);
}

namespace {

void partition_rec(const Graph& g, VertexSet remaining, GraphPartition& acc,
                   const std::function<void(const GraphPartition&)>& fn) {
    if (remaining == 0) {
        fn(acc);
        return;
    }
    int v = lowest_vertex(remaining);
    // Every block containing v is a tube inside `remaining` containing v.
    // Sweep subsets of remaining \ {v} and attach v.
    VertexSet rest = remaining & ~(VertexSet(1) << v);
    VertexSet sub = 0;
    while (true) {
        VertexSet block = sub | (VertexSet(1) << v);
        if (is_tube(g, block)) {
            acc.push_back(block);
            partition_rec(g, remaining & ~block, acc, fn);
            acc.pop_back();
        }
        if (sub == rest) break;
        sub = (sub - rest) & rest;  // next subset of rest
    }
}

} // namespace

void for_each_graph_partition(const Graph& g, const std::function<void(const GraphPartition&)>& fn,
                              int limit) {
    if (!is_connected(g)) throw std::invalid_argument("graph_partitions: graph must be connected");
    if (g.n > limit) throw budget_error("graph_partitions: vertex count exceeds limit " + std::to_string(limit));
    GraphPartition acc;
    partition_rec(g, g.vertex_mask(), acc, fn);
}

std::vector<GraphPartition> graph_partitions(const Graph& g, int limit) {
    std::vector<GraphPartition> out;
    for_each_graph_partition(g, [&](const GraphPartition& p) { out.push_back(p); }, limit);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

namespace {

// q^n
IntPolynomial q_power(int n) {
    IntPolynomial p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    return p;
}

// q(q-1)...(q-n+1)
IntPolynomial falling_factorial(int n) {
    IntPolynomial p;
    p.coeffs = {1};
    for (int i = 0; i < n; ++i) {
        std::vector<Int> next(p.coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
            next[j + 1] += p.coeffs[j];
            next[j] -= p.coeffs[j] * i;
        }
        p.coeffs = std::move(next);
    }
    return p;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

Graph delete_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.adj[u] &= ~(VertexSet(1) << v);
    out.adj[v] &= ~(VertexSet(1) << u);
    return out;
}

Graph add_edge_copy(const Graph& g, int u, int v) {
    Graph out = g;
    out.add_edge(u, v);
    return out;
}

// Merge v into u and compact the labels. The pair {u, v} need not be a
// tube here (addition-contraction merges non-adjacent vertices), so this
// bypasses contract().
Graph merge_vertices(const Graph& g, int u, int v) {
    Graph out(g.n - 1);
    std::vector<int> label(g.n);
    int next = 0;
    for (int w = 0; w < g.n; ++w) label[w] = (w == v) ? -1 : next++;
    label[v] = label[u];
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.has_edge(a, b) && label[a] != label[b] && !out.has_edge(label[a], label[b]))
                out.add_edge(label[a], label[b]);
    return out;
}

IntPolynomial chromatic_rec(const Graph& g, std::unordered_map<std::string, IntPolynomial>& memo) {
    if (g.n == 0) return IntPolynomial{{Int(1)}};
    // Split over connected components.
    VertexSet comp = component_of(g, g.vertex_mask(), 0);
    if (comp != g.vertex_mask()) {
        IntPolynomial left = chromatic_rec(induced(g, comp), memo);
        IntPolynomial right = chromatic_rec(induced(g, g.vertex_mask() & ~comp), memo);
        return poly_mul(left, right);
    }
    int m = g.edge_count();
    int full = g.n * (g.n - 1) / 2;
    if (m == 0) return q_power(g.n);
    if (m == full) return falling_factorial(g.n);

    std::string key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    IntPolynomial result;
    if (2 * m >= full) {
        // Dense: chi(G) = chi(G+e) + chi(G/e) toward the complete graph.
        int u = -1, v = -1;
        for (int a = 0; a < g.n && u < 0; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (!g.has_edge(a, b)) { u = a; v = b; break; }
        result = chromatic_rec(add_edge_copy(g, u, v), memo);
        result += chromatic_rec(merge_vertices(g, u, v), memo);
    } else {
        // Sparse: chi(G) = chi(G-e) - chi(G/e).
        auto e = g.edges().front();
        result = chromatic_rec(delete_edge(g, e.first, e.second), memo);
        result -= chromatic_rec(merge_vertices(g, e.first, e.second), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

IntPolynomial chromatic_polynomial(const Graph& g, int limit) {
    if (g.n > limit) throw budget_error("chromatic_polynomial: vertex count exceeds limit " + std::to_string(limit));
    std::unordered_map<std::string, IntPolynomial> memo;
    return chromatic_rec(g, memo);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle_graph: n must be >= 1");
    if (n <= 2) return path_graph(n);
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_multipartite(const std::vector<int>& lambda) {
    int n = 0;
    for (int part : lambda) {
        if (part < 1) throw std::invalid_argument("complete_multipartite: parts must be positive");
        n += part;
    }
    Graph g(n);
    std::vector<int> block_of(n);
    int v = 0;
    for (std::size_t b = 0; b < lambda.size(); ++b)
        for (int i = 0; i < lambda[b]; ++i) block_of[v++] = static_cast<int>(b);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (block_of[u] != block_of[w]) g.add_edge(u, w);
    return g;
}

Graph empty_graph() { return Graph(0); }

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn, int limit) {
    if (n < 1) throw std::invalid_argument("for_each_connected_graph: n must be >= 1");
    if (n > limit) throw budget_error("for_each_connected_graph: n exceeds limit " + std::to_string(limit));
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) idx.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        Graph g(n);
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1) g.add_edge(idx[b].first, idx[b].second);
        if (is_connected(g)) fn(g);
    }
}

std::size_t count_connected_graphs(int n, int limit) {
    std::size_t count = 0;
    for_each_connected_graph(n, [&](const Graph&) { ++count; }, limit);
    return count;
}

namespace {

Graph parse_family(const std::string& spec) {
    char kind = spec[0];
    std::string rest = spec.substr(1);
    if (kind == 'K' && rest.find(',') != std::string::npos) {
        std::vector<int> lambda;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) lambda.push_back(std::stoi(item));
        std::sort(lambda.begin(), lambda.end(), std::greater<int>());
        return complete_multipartite(lambda);
    }
    int n = std::stoi(rest);
    switch (kind) {
        case 'P': return path_graph(n);
        case 'C': return cycle_graph(n);
        case 'K': return complete_graph(n);
        default: throw std::invalid_argument("unknown graph family: " + spec);
    }
}

} // namespace

Graph parse_graph(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty graph spec");
    if (spec[0] == 'P' || spec[0] == 'C' || spec[0] == 'K') {
        bool family = spec.size() > 1;
        for (std::size_t i = 1; i < spec.size() && family; ++i)
            if (!isdigit(spec[i]) && spec[i] != ',') family = false;
        if (family) return parse_family(spec);
    }
    std::istringstream in(spec);
    int n;
    if (!(in >> n)) throw std::invalid_argument("malformed graph spec: " + spec);
    Graph g(n);
    int u, v;
    while (in >> u >> v) {
        if (!(0 <= u && u < v && v < n))
            throw std::invalid_argument("edge list requires 0 <= u < v < n");
        g.add_edge(u, v);
    }
    if (!in.eof()) throw std::invalid_argument("malformed edge list: " + spec);
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string graph_key(const Graph& g) {
    std::string key;
    key.reserve(4 * (g.n + 1));
    auto push = [&](VertexSet w) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
    };
    push(static_cast<VertexSet>(g.n));
    for (VertexSet row : g.adj) push(row);
    return key;
}

} // namespace contractad
