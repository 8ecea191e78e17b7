#include "contractad/graphic_functions.hpp"

#include "contractad/hamiltonian.hpp"
#include "contractad/planeq.hpp"

#include <algorithm>
#include <stdexcept>

namespace contractad {

GraphicFunction::GraphicFunction(std::string name, std::function<Rational(const Graph&)> evaluator)
    : name_(std::move(name)),
      eval_(std::move(evaluator)),
      memo_(std::make_shared<std::unordered_map<std::string, Rational>>()) {}

Rational GraphicFunction::operator()(const Graph& g) const {
    if (!eval_) throw std::logic_error("empty graphic function");
    std::string key = graph_key(g);
    auto it = memo_->find(key);
    if (it != memo_->end()) return it->second;
    Rational value = eval_(g);
    memo_->emplace(std::move(key), value);
    return value;
}

GraphicFunction epsilon() {
    return GraphicFunction("eps", [](const Graph& g) { return Rational(g.n == 1 ? 1 : 0); });
}

GraphicFunction star(const GraphicFunction& f, const GraphicFunction& h, int limit) {
    std::string name = "(" + f.name() + "*" + h.name() + ")";
    return GraphicFunction(name, [f, h, limit](const Graph& g) {
        if (g.n > limit) throw budget_error("star: vertex count exceeds limit " + std::to_string(limit));
        Rational total = 0;
        for_each_graph_partition(g, [&](const GraphPartition& p) {
            Rational term = f(contract(g, p));
            if (term == 0) return;
            for (VertexSet block : p) {
                term *= h(induced(g, block));
                if (term == 0) return;
            }
            total += term;
        }, limit);
        return total;
    });
}

GraphicFunction omega(const GraphicFunction& f) {
    return GraphicFunction("w(" + f.name() + ")", [f](const Graph& g) {
        Rational v = f(g);
        return (g.n % 2 == 0) ? -v : v;
    });
}

GraphicFunction gf_hp() {
    return GraphicFunction("HP", [](const Graph& g) { return Rational(hp_count(g)); });
}

GraphicFunction gf_hc() {
    return GraphicFunction("HC", [](const Graph& g) { return Rational(hc_count(g)); });
}

GraphicFunction gf_pe() {
    return GraphicFunction("PE", [](const Graph& g) { return Rational(planeq_count(g)); });
}

GraphicFunction gf_ce() {
    return GraphicFunction("CE", [](const Graph& g) { return Rational(cyceq_count(g)); });
}

GraphicFunction gf_p() {
    return GraphicFunction("P", [](const Graph& g) { return Rational(Int(factorial(g.n))); });
}

GraphicFunction gf_c() {
    return GraphicFunction("C", [](const Graph& g) { return Rational(Int(factorial(g.n - 1))); });
}

GraphicFunction gf_hp_bar() {
    return GraphicFunction("HPbar", [](const Graph& g) { return Rational(hp_count(complement(g))); });
}

GraphicFunction gf_hc_bar() {
    return GraphicFunction("HCbar", [](const Graph& g) {
        if (g.n == 1) return Rational(0);  // convention
        Graph c = complement(g);
        if (!is_connected(c)) return Rational(0);
        return Rational(hc_count(c));
    });
}

GraphicFunction builtin(const std::string& name) {
    if (name == "hp") return gf_hp();
    if (name == "hc") return gf_hc();
    if (name == "pe") return gf_pe();
    if (name == "ce") return gf_ce();
    if (name == "p") return gf_p();
    if (name == "c") return gf_c();
    if (name == "hp-bar") return gf_hp_bar();
    if (name == "hc-bar") return gf_hc_bar();
    throw std::invalid_argument("unknown graphic function: " + name);
}

namespace {

std::string rat_str(const Rational& r) {
    return r.str();
}

struct PartitionSums {
    // sum over partitions of sign * f(G/I) * prod h(G|_B), for the handful
    // of (f, h) pairs the identities need
    Rational w_pe_hp = 0;   // w(PE)*HP
    Rational w_hp_pe = 0;   // w(HP)*PE
    Rational w_ce_hp = 0;   // w(CE)*HP
    Rational hpbar_pe = 0;  // HPbar*PE
    Rational hcbar_pe = 0;  // HCbar*PE
    Rational w_p_hp = 0;    // w(P)*HP
    Rational w_c_hp = 0;    // w(C)*HP
};

PartitionSums partition_sums(const Graph& g, BuiltinSet& fns) {
    PartitionSums sums;
    for_each_graph_partition(g, [&](const GraphPartition& p) {
        Graph contracted = contract(g, p);
        int k = contracted.n;
        Rational sign = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
        Rational prod_hp = 1, prod_pe = 1;
        for (VertexSet block : p) {
            Graph sub = induced(g, block);
            prod_hp *= fns.hp(sub);
            prod_pe *= fns.pe(sub);
        }
        if (prod_hp != 0) {
            sums.w_pe_hp += sign * fns.pe(contracted) * prod_hp;
            sums.w_ce_hp += sign * fns.ce(contracted) * prod_hp;
            sums.w_p_hp += sign * fns.p(contracted) * prod_hp;
            sums.w_c_hp += sign * fns.c(contracted) * prod_hp;
        }
        if (prod_pe != 0) {
            sums.w_hp_pe += sign * fns.hp(contracted) * prod_pe;
            sums.hpbar_pe += fns.hp_bar(contracted) * prod_pe;
            sums.hcbar_pe += fns.hc_bar(contracted) * prod_pe;
        }
    });
    return sums;
}

} // namespace

std::vector<IdentityCheck> check_identities(const Graph& g, BuiltinSet& fns,
                                            const std::vector<std::string>& which) {
    if (!is_connected(g)) throw std::invalid_argument("check_identities: graph must be connected");
    auto wanted = [&](const std::string& id) {
        return which.empty() || std::find(which.begin(), which.end(), id) != which.end();
    };
    PartitionSums sums = partition_sums(g, fns);
    Rational eps = (g.n == 1) ? 1 : 0;
    Rational sign_n = (g.n % 2 == 0) ? -1 : 1;  // (-1)^(n-1)

    std::vector<IdentityCheck> out;
    auto push = [&](const std::string& id, const Rational& lhs, const Rational& rhs) {
        out.push_back({id, rat_str(lhs), rat_str(rhs), lhs == rhs});
    };
    if (wanted("hp-inverse")) {
        push("hp-inverse", sums.w_pe_hp, eps);
        push("hp-inverse", sums.w_hp_pe, eps);
    }
    if (wanted("hc-inverse")) push("hc-inverse", sums.w_ce_hp, fns.hc(g));
    if (wanted("perm")) push("perm", sums.hpbar_pe, fns.p(g));
    if (wanted("cycperm")) push("cycperm", fns.ce(g) + sums.hcbar_pe, fns.c(g));
    if (wanted("theorem5")) {
        push("theorem5", sums.w_p_hp, sign_n * fns.hp_bar(g));
        if (g.edge_count() >= 1)
            push("theorem5", sums.w_c_hp, fns.hc(g) + sign_n * fns.hc_bar(g));
    }
    return out;
}

} // namespace contractad
