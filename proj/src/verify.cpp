#include "contractad/verify.hpp"

#include "contractad/parallel.hpp"

#include <random>
#include <set>
#include <thread>

namespace contractad {

namespace {

std::vector<Graph> graphs_for_level(int n, bool full_n7, int sample_n7, unsigned seed) {
    if (n <= 6 || full_n7) {
        std::vector<Graph> out;
        for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
        return out;
    }
    // seeded sample of distinct labeled connected graphs on 7 vertices
    std::mt19937 rng(seed);
    int pairs = n * (n - 1) / 2;
    std::uniform_int_distribution<std::uint32_t> dist(0, (1u << pairs) - 1);
    std::set<std::uint32_t> seen;
    std::vector<std::pair<int, int>> idx;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) idx.emplace_back(u, v);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < sample_n7) {
        std::uint32_t mask = dist(rng);
        if (!seen.insert(mask).second) continue;
        Graph g(n);
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1) g.add_edge(idx[b].first, idx[b].second);
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

} // namespace

SweepResult sweep_identities(int max_n, const std::vector<std::string>& which, int jobs,
                             int sample_n7, unsigned seed, bool full_n7,
                             std::size_t max_failures, bool record_per_graph) {
    if (max_n > 7) throw budget_error("sweep_identities: max_n exceeds the *-product limit 7");
    SweepResult result;
    jobs = resolve_jobs(jobs);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> graphs = graphs_for_level(n, full_n7, sample_n7, seed);
        // One builtin set (one memo family) per worker; chunks are
        // contiguous so the aggregated output order is fixed.
        int workers = std::min<int>(jobs, std::max<std::size_t>(graphs.size(), 1));
        std::vector<std::vector<std::vector<IdentityCheck>>> chunk_out(workers);
        std::vector<std::thread> pool;
        std::size_t chunk = (graphs.size() + workers - 1) / std::max(workers, 1);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                BuiltinSet fns;
                std::size_t lo = w * chunk;
                std::size_t hi = std::min(graphs.size(), lo + chunk);
                auto& out = chunk_out[w];
                out.reserve(hi > lo ? hi - lo : 0);
                for (std::size_t i = lo; i < hi; ++i) out.push_back(check_identities(graphs[i], fns, which));
            });
        }
        for (auto& t : pool) t.join();
        std::size_t gi = 0;
        for (int w = 0; w < workers; ++w) {
            for (auto& checks : chunk_out[w]) {
                const Graph& g = graphs[gi++];
                ++result.graphs_checked;
                bool graph_pass = true;
                for (auto& c : checks) {
                    ++result.checks_run;
                    if (!c.holds) {
                        graph_pass = false;
                        if (result.failures.size() < max_failures)
                            result.failures.push_back({n, format_edge_list(g), c});
                    }
                }
                if (record_per_graph) result.per_graph.push_back({n, format_edge_list(g), graph_pass});
            }
        }
    }
    return result;
}

} // namespace contractad
