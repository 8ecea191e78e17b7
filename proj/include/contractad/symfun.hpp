#ifndef CONTRACTAD_SYMFUN_HPP
#define CONTRACTAD_SYMFUN_HPP

#include "contractad/graphic_functions.hpp"

#include <map>
#include <string>
#include <vector>

namespace contractad {

// Weakly decreasing positive parts.
using IntegerPartition = std::vector<int>;

int weight(const IntegerPartition& lambda);
int length(const IntegerPartition& lambda);
Int partition_factorial(const IntegerPartition& lambda);          // lambda!
int eps_sign(const IntegerPartition& lambda);                     // (-1)^(|l|-l(l))
Int multiplicity_multinomial(const IntegerPartition& lambda);     // l(l)! / prod m_i(l)!
bool dominates(const IntegerPartition& lambda, const IntegerPartition& mu);
std::vector<IntegerPartition> partitions_of(int w);
IntegerPartition merge_parts(const IntegerPartition& a, const IntegerPartition& b);

/// Number of assignments of mu's parts to l(lambda) rows with row sums
/// lambda. Zero unless lambda dominates mu. Requires |mu| = |lambda|.
Int transition_L(const IntegerPartition& mu, const IntegerPartition& lambda);

/// Truncated symmetric function with an auxiliary variable z. Terms are
/// keyed by (z-degree, partition); the truncation weight bounds z-degree
/// plus partition weight. Basis is either monomial ('m') or power sum
/// ('p').
struct SymSeries {
    char basis = 'm';
    int trunc = 0;
    std::map<std::pair<int, IntegerPartition>, Rational> terms;

    Rational coeff(int zdeg, const IntegerPartition& lambda) const;
    SymSeries& add_term(int zdeg, const IntegerPartition& lambda, const Rational& value);
    void prune();  // drop zero coefficients
    bool operator==(const SymSeries& other) const;
    std::string to_string() const;
};

SymSeries sym_zero(char basis, int trunc);
SymSeries sym_add(const SymSeries& f, const SymSeries& h);
SymSeries sym_scale(const SymSeries& f, const Rational& c);

/// Product; both operands in p-basis with equal truncation.
SymSeries multiply(const SymSeries& f, const SymSeries& h);

SymSeries p_to_m(const SymSeries& f);
SymSeries m_to_p(const SymSeries& f);

/// Substitute g (zero constant term, p-basis) for the variable z of f
/// (p-basis); power sums pass through unchanged.
SymSeries substitute_z(const SymSeries& f, const SymSeries& g);

/// -f(-x, -z): the sign twist matching omega on graphic functions.
SymSeries omega_transform(const SymSeries& f);

/// Young generating series of a graphic function to total weight N
/// (m-basis): coefficient of z^n m_lambda is f(K_{(1^n) u lambda})/(n! l!),
/// with the z^0 stratum restricted to partitions of length >= 2.
SymSeries young_generating(const GraphicFunction& f, int max_weight,
                           int limit = default_limits().young_weight);

/// Closed forms for the complete-multipartite path/cycle counts, expanded
/// to total weight N in the m-basis:
///   hp: 1 / (1 - (z + p_1 - p_2 + p_3 - ...))
///   hc: -log(1 - (z + p_1 - p_2 + ...)) + sum (-1)^n p_n / n
SymSeries hp_series_closed(int max_weight, int limit = default_limits().young_weight);
SymSeries hc_series_closed(int max_weight, int limit = default_limits().young_weight);

/// Alternating-sum closed forms for HP/HC of K_{(1^k) u lambda}.
Int hp_multipartite(int k, const IntegerPartition& lambda,
                    int limit = default_limits().multipartite);
Int hc_multipartite(int k, const IntegerPartition& lambda,
                    int limit = default_limits().multipartite);

/// Coefficientwise check of
///   sum_lambda chi_{K_lambda}(q) m_lambda / lambda! = (1 + sum p_n/n!)^q
/// to total weight N for a small non-negative integer q.
bool chromatic_generating_check(int q, int max_weight);

} // namespace contractad

#endif
