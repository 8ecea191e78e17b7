#ifndef CONTRACTAD_GRAPHIC_FUNCTIONS_HPP
#define CONTRACTAD_GRAPHIC_FUNCTIONS_HPP

#include "contractad/graph.hpp"

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

namespace contractad {

/// Exact-rational function on connected graphs with a per-instance memo
/// keyed by the labeled graph. Copies share the memo.
class GraphicFunction {
public:
    GraphicFunction() = default;
    GraphicFunction(std::string name, std::function<Rational(const Graph&)> evaluator);

    Rational operator()(const Graph& g) const;
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<Rational(const Graph&)> eval_;
    std::shared_ptr<std::unordered_map<std::string, Rational>> memo_;
};

/// Unit of the *-product: 1 on the one-vertex graph, 0 elsewhere.
GraphicFunction epsilon();

/// Convolution over graph partitions:
/// (f*h)(G) = sum_{I |- G} f(G/I) prod_{B in I} h(G|_B).
GraphicFunction star(const GraphicFunction& f, const GraphicFunction& h,
                     int limit = default_limits().star_product);

/// Pointwise sign twist (-1)^(n-1); an involution.
GraphicFunction omega(const GraphicFunction& f);

// Built-ins. hp_bar/hc_bar evaluate in the complement graph, which may be
// disconnected (value 0 then); hc_bar(P_1) = 0 by convention.
GraphicFunction gf_hp();
GraphicFunction gf_hc();
GraphicFunction gf_pe();
GraphicFunction gf_ce();
GraphicFunction gf_p();   // n!
GraphicFunction gf_c();   // (n-1)!
GraphicFunction gf_hp_bar();
GraphicFunction gf_hc_bar();

GraphicFunction builtin(const std::string& name);  // hp|hc|pe|ce|p|c|hp-bar|hc-bar

/// One graph's worth of the identity sweep. All partition sums are
/// evaluated in a single pass over the graph partitions.
struct IdentityCheck {
    std::string identity;   // hp-inverse, hc-inverse, perm, cycperm, theorem5
    std::string lhs, rhs;   // exact values as strings
    bool holds = true;
};

struct BuiltinSet {
    GraphicFunction hp = gf_hp();
    GraphicFunction hc = gf_hc();
    GraphicFunction pe = gf_pe();
    GraphicFunction ce = gf_ce();
    GraphicFunction p = gf_p();
    GraphicFunction c = gf_c();
    GraphicFunction hp_bar = gf_hp_bar();
    GraphicFunction hc_bar = gf_hc_bar();
};

/// Evaluates the selected identities on one connected graph. Pass an empty
/// selector for all of them.
std::vector<IdentityCheck> check_identities(const Graph& g, BuiltinSet& fns,
                                            const std::vector<std::string>& which = {});

} // namespace contractad

#endif
