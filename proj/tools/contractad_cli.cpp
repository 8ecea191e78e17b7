// contractad-lab: exact counting and identity verification for Hamiltonian
// paths/cycles, realizable tuples, Koszul complexes, and the associated
// generating series.

#include "contractad/hamiltonian.hpp"
#include "contractad/koszul.hpp"
#include "contractad/planeq.hpp"
#include "contractad/series.hpp"
#include "contractad/symfun.hpp"
#include "contractad/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "contractad/limits.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace contractad;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json report_skeleton(const std::string& command) {
    json r;
    r["command"] = command;
    r["version"] = kVersion;
    return r;
}

std::vector<Pattern> parse_patterns(const std::string& arg) {
    std::vector<Pattern> out;
    std::stringstream ss(arg);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "bp") {
            auto bp = b_p_patterns();
            out.insert(out.end(), bp.begin(), bp.end());
        } else if (token == "bc") {
            auto bc = b_c_patterns();
            out.insert(out.end(), bc.begin(), bc.end());
        } else {
            Pattern p;
            for (char c : token) {
                if (!isdigit(c)) throw std::invalid_argument("bad pattern token: " + token);
                p.push_back(c - '0');
            }
            if (p.empty()) throw std::invalid_argument("empty pattern token");
            out.push_back(p);
        }
    }
    return out;
}

IntegerPartition parse_partition(const std::string& arg) {
    IntegerPartition lambda;
    if (arg.empty()) return lambda;
    std::stringstream ss(arg);
    std::string token;
    while (std::getline(ss, token, ',')) lambda.push_back(std::stoi(token));
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    return lambda;
}

std::string seq_str(const std::vector<int>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
    return out;
}

int run_count(const std::string& graph_spec, const std::string& what, bool as_json,
              const Limits& limits) {
    Graph g = parse_graph(graph_spec);
    std::string value;
    if (what == "hp")
        value = std::to_string(hp_count(g, limits.hamiltonian));
    else if (what == "hc")
        value = std::to_string(hc_count(g, limits.hamiltonian));
    else if (what == "acyclic")
        value = acyclic_orientation_count(g, limits.chromatic).str();
    else
        throw std::invalid_argument("count: --what must be hp, hc, or acyclic");
    if (as_json) {
        json r = report_skeleton("count");
        r["graph"] = graph_spec;
        r["what"] = what;
        r["value"] = value;
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int run_planeq(const std::string& graph_spec, bool list, bool as_json, const Limits& limits) {
    Graph g = parse_graph(graph_spec);
    if (!list) {
        std::cout << planeq_count(g, limits.planeq_dp) << "\n";
        return 0;
    }
    auto tuples = planeq_tuples(g, limits.planeq_sweep);
    if (as_json) {
        json r = report_skeleton("planeq");
        r["graph"] = graph_spec;
        r["count"] = tuples.size();
        r["tuples"] = json::array();
        for (const auto& t : tuples) r["tuples"].push_back(seq_str(t));
        std::cout << r.dump(2) << "\n";
    } else {
        for (const auto& t : tuples) std::cout << seq_str(t) << "\n";
    }
    return 0;
}

int run_verify(int max_n, const std::vector<std::string>& which, int jobs, unsigned seed,
               bool full_n7, bool pretty, bool per_graph) {
    Timer timer;
    SweepResult sweep = sweep_identities(max_n, which, jobs, 1000, seed, full_n7, 25, per_graph);
    json r = report_skeleton("verify-identities");
    r["max_n"] = max_n;
    r["graphs_checked"] = sweep.graphs_checked;
    r["checks_run"] = sweep.checks_run;
    r["passed"] = sweep.all_pass();
    r["elapsed_ms"] = timer.ms();
    r["counterexamples"] = json::array();
    for (const auto& f : sweep.failures) {
        json c;
        c["identity"] = f.check.identity;
        c["n"] = f.n;
        c["edge_list"] = f.edge_list;
        c["lhs"] = f.check.lhs;
        c["rhs"] = f.check.rhs;
        r["counterexamples"].push_back(c);
    }
    if (per_graph) {
        r["items"] = json::array();
        for (const auto& item : sweep.per_graph) {
            json entry;
            entry["n"] = item.n;
            entry["edge_list"] = item.edge_list;
            entry["pass"] = item.pass;
            r["items"].push_back(entry);
        }
    }
    if (pretty) {
        if (per_graph)
            for (const auto& item : sweep.per_graph)
                std::cout << (item.pass ? "pass " : "FAIL ") << "n=" << item.n << " "
                          << item.edge_list.substr(0, item.edge_list.find('\n')) << "; ";
        std::cout << (sweep.all_pass() ? "PASS" : "FAIL") << ": " << sweep.checks_run
                  << " checks on " << sweep.graphs_checked << " graphs ("
                  << timer.ms() << " ms)\n";
        for (const auto& f : sweep.failures)
            std::cout << "counterexample [" << f.check.identity << "] n=" << f.n << " lhs="
                      << f.check.lhs << " rhs=" << f.check.rhs << "\n" << f.edge_list;
    } else {
        std::cout << r.dump(2) << "\n";
    }
    return sweep.all_pass() ? 0 : 1;
}

int run_koszul(const std::string& graph_spec, const std::string& module, const std::string& dump,
               bool pretty, const Limits& limits) {
    Timer timer;
    Graph g = parse_graph(graph_spec);
    RationalChainComplex complex =
        module == "ham" ? build_ham_koszul(g, limits.koszul) : build_cycham_koszul(g, limits.koszul);
    bool d2 = complex.differential_squares_to_zero();
    std::vector<long long> betti = d2 ? homology_ranks(complex) : std::vector<long long>{};
    std::vector<long long> expected(g.n, 0);
    if (module == "ham") {
        if (g.n == 1) expected[0] = 1;
    } else {
        expected[0] = hc_count(g);
    }
    bool pass = d2 && betti == expected;
    if (!dump.empty()) {
        std::ofstream out(dump);
        out << dump_matrices(complex);
    }
    json r = report_skeleton("koszul-check");
    r["graph"] = graph_spec;
    r["module"] = module;
    r["dims"] = json::array();
    for (std::size_t d = 0; d < complex.degrees(); ++d) r["dims"].push_back(complex.dim(d));
    r["d_squared_zero"] = d2;
    r["betti"] = betti;
    r["expected"] = expected;
    r["passed"] = pass;
    r["elapsed_ms"] = timer.ms();
    if (pretty) {
        std::cout << (pass ? "PASS" : "FAIL") << " " << module << " on " << graph_spec
                  << "; betti =";
        for (long long b : betti) std::cout << " " << b;
        std::cout << "\n";
    } else {
        std::cout << r.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

int run_young(const std::string& fname, int max_weight, const std::string& format,
              const Limits& limits) {
    GraphicFunction f = builtin(fname);
    SymSeries series = young_generating(f, max_weight, limits.young_weight);
    if (format == "json") {
        json r = report_skeleton("young-series");
        r["f"] = fname;
        r["max_weight"] = max_weight;
        r["terms"] = json::array();
        for (const auto& [key, value] : series.terms) {
            json t;
            t["n"] = key.first;
            t["lambda"] = key.second;
            t["numerator"] = numerator(value).str();
            t["denominator"] = denominator(value).str();
            r["terms"].push_back(t);
        }
        std::cout << r.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : series.terms) {
            std::cout << key.first << ";" << seq_str(key.second) << ";" << numerator(value).str()
                      << "/" << denominator(value).str() << "\n";
        }
    }
    return 0;
}

int run_series(const std::string& name, int order, const std::string& format,
               const Limits& limits) {
    std::vector<std::string> values(order + 1);
    if (name == "hertzsprung") {
        RationalSeries s = hertzsprung(order, limits.series_order);
        for (int n = 0; n <= order; ++n) values[n] = numerator(s.coeffs[n]).str();
    } else if (name == "cyclic-hertzsprung") {
        auto numbers = cyclic_hertzsprung_numbers(order, limits.series_order);
        for (int n = 0; n <= order; ++n) values[n] = numbers[n].str();
    } else if (name == "schroder") {
        RationalSeries s = schroder_series(order, limits.series_order);
        for (int n = 0; n <= order; ++n) values[n] = numerator(s.coeffs[n]).str();
    } else if (name == "fp-hp") {
        RationalSeries s = ogf_path(gf_hp(), order);
        for (int n = 0; n <= order; ++n) values[n] = numerator(s.coeffs[n]).str();
    } else if (name == "fc-pe") {
        RationalSeries s = ogf_cycle(gf_pe(), order);
        for (int n = 0; n <= order; ++n)
            values[n] = numerator(s.coeffs[n]).str() + "/" + denominator(s.coeffs[n]).str();
    } else {
        throw std::invalid_argument("series: unknown --name " + name);
    }
    if (format == "json") {
        json r = report_skeleton("series");
        r["name"] = name;
        r["order"] = order;
        r["coefficients"] = json::array();
        for (int n = 1; n <= order; ++n) r["coefficients"].push_back(values[n]);
        std::cout << r.dump(2) << "\n";
    } else {
        for (int n = 1; n <= order; ++n) std::cout << n << "," << values[n] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamiltonian path/cycle counting and verification lab"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_version_flag("--version", kVersion);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for sweeps (default: CONTRACTAD_LAB_JOBS or 1)");

    // every size budget from limits.hpp is overridable
    Limits limits = default_limits();
    app.add_option("--max-hamiltonian-n", limits.hamiltonian, "path/cycle enumeration cap");
    app.add_option("--max-chromatic-n", limits.chromatic, "deletion-contraction cap");
    app.add_option("--max-partitions-n", limits.graph_partitions, "partition enumeration cap");
    app.add_option("--max-planeq-sweep-n", limits.planeq_sweep, "n!-filter cap");
    app.add_option("--max-planeq-dp-n", limits.planeq_dp, "subset-DP cap");
    app.add_option("--max-koszul-n", limits.koszul, "Koszul complex cap");
    app.add_option("--max-multipartite-size", limits.multipartite, "k + |lambda| cap");
    app.add_option("--max-young-weight", limits.young_weight, "Young series weight cap");
    app.add_option("--max-series-order", limits.series_order, "univariate series order cap");

    // count
    auto* count = app.add_subcommand("count", "count hp|hc|acyclic on one graph");
    std::string count_graph, count_what = "hp";
    bool count_json = false;
    count->add_option("--graph", count_graph, "graph spec (P5, C6, K4, K2,2,1 or edge list)")->required();
    count->add_option("--what", count_what, "hp|hc|acyclic");
    count->add_flag("--json", count_json, "emit a JSON record");

    // planeq
    auto* planeq = app.add_subcommand("planeq", "realizable tuples of one graph");
    std::string planeq_graph;
    bool planeq_list = false, planeq_do_count = false, planeq_json = false;
    planeq->add_option("--graph", planeq_graph)->required();
    planeq->add_flag("--list", planeq_list, "list the tuples");
    planeq->add_flag("--count", planeq_do_count, "print the count (default)");
    planeq->add_flag("--json", planeq_json);

    // avoiders
    auto* avoid = app.add_subcommand("avoiders", "count pattern-avoiding permutations");
    int avoid_n = 0;
    std::string avoid_patterns;
    avoid->add_option("--n", avoid_n)->required();
    avoid->add_option("--patterns", avoid_patterns, "comma-separated digit patterns, or bp / bc")->required();

    // verify-identities
    auto* verify = app.add_subcommand("verify-identities", "sweep the convolution identities");
    int verify_max_n = 6;
    std::vector<std::string> verify_which;
    unsigned verify_seed = 1;
    bool verify_full_n7 = false, verify_pretty = false, verify_per_graph = false;
    verify->add_option("--max-n", verify_max_n, "largest vertex count (7 = sampled)");
    verify->add_option("--identity", verify_which,
                       "subset of hp-inverse|hc-inverse|perm|cycperm|theorem5");
    verify->add_option("--seed", verify_seed, "seed for the n=7 sample");
    verify->add_flag("--full-n7", verify_full_n7, "sweep all 2^21 graphs at n=7");
    verify->add_flag("--pretty", verify_pretty, "human-readable output");
    verify->add_flag("--per-graph", verify_per_graph, "record pass/fail for every graph");

    // koszul-check
    auto* koszul = app.add_subcommand("koszul-check", "build a Koszul complex and test exactness");
    std::string koszul_graph, koszul_module = "ham", koszul_dump;
    bool koszul_pretty = false;
    koszul->add_option("--graph", koszul_graph)->required();
    koszul->add_option("--module", koszul_module, "ham|cycham");
    koszul->add_option("--dump-matrices", koszul_dump, "write sparse triplets to this file");
    koszul->add_flag("--pretty", koszul_pretty);

    // multipartite
    auto* multi = app.add_subcommand("multipartite", "closed-form hp/hc counts on K_{(1^k) u lambda}");
    int multi_k = 0;
    std::string multi_lambda, multi_what = "hp";
    multi->add_option("--k", multi_k, "number of extra singleton blocks");
    multi->add_option("--lambda", multi_lambda, "partition, e.g. 3,2");
    multi->add_option("--what", multi_what, "hp|hc");

    // young-series
    auto* young = app.add_subcommand("young-series", "Young generating series of a builtin");
    std::string young_f = "hp", young_format = "json";
    int young_weight = 6;
    young->add_option("--f", young_f, "hp|hc|pe|ce|p|c|hp-bar|hc-bar");
    young->add_option("--max-weight", young_weight);
    young->add_option("--format", young_format, "json|csv");

    // series
    auto* series = app.add_subcommand("series", "univariate series tables");
    std::string series_name, series_format = "csv";
    int series_order = 10;
    series->add_option("--name", series_name,
                       "hertzsprung|cyclic-hertzsprung|schroder|fp-hp|fc-pe")->required();
    series->add_option("--order", series_order);
    series->add_option("--format", series_format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) return run_count(count_graph, count_what, count_json, limits);
        if (*planeq)
            return run_planeq(planeq_graph, planeq_list && !planeq_do_count, planeq_json, limits);
        if (*avoid) {
            std::cout << avoiders(avoid_n, parse_patterns(avoid_patterns), limits.planeq_sweep)
                      << "\n";
            return 0;
        }
        if (*verify)
            return run_verify(verify_max_n, verify_which, jobs, verify_seed, verify_full_n7,
                              verify_pretty, verify_per_graph);
        if (*koszul)
            return run_koszul(koszul_graph, koszul_module, koszul_dump, koszul_pretty, limits);
        if (*multi) {
            IntegerPartition lambda = parse_partition(multi_lambda);
            Int value = (multi_what == "hc") ? hc_multipartite(multi_k, lambda, limits.multipartite)
                                             : hp_multipartite(multi_k, lambda, limits.multipartite);
            std::cout << value.str() << "\n";
            return 0;
        }
        if (*young) return run_young(young_f, young_weight, young_format, limits);
        if (*series) return run_series(series_name, series_order, series_format, limits);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
