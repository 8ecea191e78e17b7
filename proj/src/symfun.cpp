#include "contractad/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace contractad {

int weight(const IntegerPartition& lambda) {
    int w = 0;
    for (int part : lambda) w += part;
    return w;
}

int length(const IntegerPartition& lambda) { return static_cast<int>(lambda.size()); }

Int partition_factorial(const IntegerPartition& lambda) {
    Int r = 1;
    for (int part : lambda) r *= factorial(part);
    return r;
}

int eps_sign(const IntegerPartition& lambda) {
    return (weight(lambda) - length(lambda)) % 2 == 0 ? 1 : -1;
}

Int multiplicity_multinomial(const IntegerPartition& lambda) {
    Int r = factorial(length(lambda));
    int run = 1;
    for (std::size_t i = 1; i <= lambda.size(); ++i) {
        if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            r /= factorial(run);
            run = 1;
        }
    }
    return r;
}

bool dominates(const IntegerPartition& lambda, const IntegerPartition& mu) {
    if (weight(lambda) != weight(mu)) return false;
    int a = 0, b = 0;
    std::size_t m = std::max(lambda.size(), mu.size());
    for (std::size_t i = 0; i < m; ++i) {
        a += i < lambda.size() ? lambda[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a < b) return false;
    }
    return true;
}

std::vector<IntegerPartition> partitions_of(int w) {
    std::vector<IntegerPartition> out;
    IntegerPartition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(w, w);
    return out;
}

IntegerPartition merge_parts(const IntegerPartition& a, const IntegerPartition& b) {
    IntegerPartition out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

Int transition_L(const IntegerPartition& mu, const IntegerPartition& lambda) {
    if (weight(mu) != weight(lambda)) throw std::invalid_argument("transition_L: weights differ");
    std::vector<int> rows(lambda.begin(), lambda.end());
    Int count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t col) {
        if (col == mu.size()) {
            for (int r : rows)
                if (r != 0) return;
            count += 1;
            return;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] >= mu[col]) {
                rows[i] -= mu[col];
                rec(col + 1);
                rows[i] += mu[col];
            }
        }
    };
    rec(0);
    return count;
}

Rational SymSeries::coeff(int zdeg, const IntegerPartition& lambda) const {
    auto it = terms.find({zdeg, lambda});
    return it == terms.end() ? Rational(0) : it->second;
}

SymSeries& SymSeries::add_term(int zdeg, const IntegerPartition& lambda, const Rational& value) {
    if (zdeg + weight(lambda) > trunc || value == 0) return *this;
    Rational& slot = terms[{zdeg, lambda}];
    slot += value;
    if (slot == 0) terms.erase({zdeg, lambda});
    return *this;
}

void SymSeries::prune() {
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
}

bool SymSeries::operator==(const SymSeries& other) const {
    if (basis != other.basis) return false;
    SymSeries a = *this, b = other;
    a.prune();
    b.prune();
    return a.terms == b.terms;
}

std::string SymSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : terms) {
        if (!first) out << " + ";
        out << "(" << value.str() << ")";
        if (key.first) out << " z^" << key.first;
        if (!key.second.empty()) {
            out << " " << basis << "[";
            for (std::size_t i = 0; i < key.second.size(); ++i)
                out << (i ? "," : "") << key.second[i];
            out << "]";
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

SymSeries sym_zero(char basis, int trunc) {
    SymSeries s;
    s.basis = basis;
    s.trunc = trunc;
    return s;
}

SymSeries sym_add(const SymSeries& f, const SymSeries& h) {
    if (f.basis != h.basis || f.trunc != h.trunc)
        throw std::invalid_argument("sym_add: mismatched basis or truncation");
    SymSeries out = f;
    for (const auto& [key, value] : h.terms) out.add_term(key.first, key.second, value);
    return out;
}

SymSeries sym_scale(const SymSeries& f, const Rational& c) {
    SymSeries out = sym_zero(f.basis, f.trunc);
    if (c == 0) return out;
    for (const auto& [key, value] : f.terms) out.add_term(key.first, key.second, c * value);
    return out;
}

SymSeries multiply(const SymSeries& f, const SymSeries& h) {
    if (f.basis != 'p' || h.basis != 'p')
        throw std::invalid_argument("multiply: operands must be in the p-basis");
    if (f.trunc != h.trunc) throw std::invalid_argument("multiply: truncations differ");
    SymSeries out = sym_zero('p', f.trunc);
    for (const auto& [ka, va] : f.terms) {
        int wa = ka.first + weight(ka.second);
        for (const auto& [kb, vb] : h.terms) {
            if (wa + kb.first + weight(kb.second) > out.trunc) continue;
            out.add_term(ka.first + kb.first, merge_parts(ka.second, kb.second), va * vb);
        }
    }
    return out;
}

SymSeries p_to_m(const SymSeries& f) {
    if (f.basis != 'p') throw std::invalid_argument("p_to_m: input must be in the p-basis");
    SymSeries out = sym_zero('m', f.trunc);
    for (const auto& [key, value] : f.terms) {
        const IntegerPartition& mu = key.second;
        if (mu.empty()) {
            out.add_term(key.first, mu, value);
            continue;
        }
        for (const IntegerPartition& lambda : partitions_of(weight(mu))) {
            if (!dominates(lambda, mu)) continue;
            Int l = transition_L(mu, lambda);
            if (l != 0) out.add_term(key.first, lambda, value * Rational(l));
        }
    }
    return out;
}

SymSeries m_to_p(const SymSeries& f) {
    if (f.basis != 'm') throw std::invalid_argument("m_to_p: input must be in the m-basis");
    SymSeries out = sym_zero('p', f.trunc);
    // Solve the dominance-triangular system weight by weight (and per
    // z-degree). Lexicographic order on partitions extends dominance.
    std::map<std::pair<int, int>, std::map<IntegerPartition, Rational>> groups;
    for (const auto& [key, value] : f.terms) {
        if (key.second.empty())
            out.add_term(key.first, {}, value);
        else
            groups[{key.first, weight(key.second)}][key.second] = value;
    }
    for (auto& [zw, wanted] : groups) {
        auto [zdeg, w] = zw;
        std::vector<IntegerPartition> lambdas = partitions_of(w);
        std::sort(lambdas.begin(), lambdas.end());  // ascending lex
        std::map<IntegerPartition, Rational> solved;
        for (const IntegerPartition& lambda : lambdas) {
            Rational rhs = 0;
            auto it = wanted.find(lambda);
            if (it != wanted.end()) rhs = it->second;
            for (const auto& [mu, c] : solved) {
                if (dominates(lambda, mu)) rhs -= c * Rational(transition_L(mu, lambda));
            }
            if (rhs != 0) solved[lambda] = rhs / Rational(transition_L(lambda, lambda));
        }
        for (const auto& [lambda, c] : solved) out.add_term(zdeg, lambda, c);
    }
    return out;
}

SymSeries substitute_z(const SymSeries& f, const SymSeries& g) {
    if (f.basis != 'p' || g.basis != 'p')
        throw std::invalid_argument("substitute_z: operands must be in the p-basis");
    if (g.coeff(0, {}) != 0) throw std::invalid_argument("substitute_z: inner constant term must vanish");
    int trunc = std::min(f.trunc, g.trunc);
    // powers of g up to the largest z-degree that appears
    int max_z = 0;
    for (const auto& [key, value] : f.terms) max_z = std::max(max_z, key.first);
    std::vector<SymSeries> powers;
    SymSeries one = sym_zero('p', trunc);
    one.add_term(0, {}, 1);
    powers.push_back(one);
    SymSeries g_trunc = sym_zero('p', trunc);
    for (const auto& [key, value] : g.terms) g_trunc.add_term(key.first, key.second, value);
    for (int j = 1; j <= max_z; ++j) powers.push_back(multiply(powers.back(), g_trunc));

    SymSeries out = sym_zero('p', trunc);
    for (const auto& [key, value] : f.terms) {
        SymSeries factor = sym_zero('p', trunc);
        factor.add_term(0, key.second, value);
        SymSeries term = multiply(powers[key.first], factor);
        out = sym_add(out, term);
    }
    return out;
}

SymSeries omega_transform(const SymSeries& f) {
    if (f.basis != 'p') throw std::invalid_argument("omega_transform: input must be in the p-basis");
    SymSeries out = sym_zero('p', f.trunc);
    for (const auto& [key, value] : f.terms) {
        int sign = (key.first + weight(key.second)) % 2 == 0 ? 1 : -1;
        out.add_term(key.first, key.second, Rational(-sign) * value);
    }
    return out;
}

namespace {

IntegerPartition with_ones(const IntegerPartition& lambda, int ones) {
    IntegerPartition out = lambda;
    out.insert(out.end(), ones, 1);
    return out;
}

// z + p_1 - p_2 + p_3 - ... up to the truncation weight
SymSeries alternating_kernel(int trunc) {
    SymSeries u = sym_zero('p', trunc);
    u.add_term(1, {}, 1);
    for (int n = 1; n <= trunc; ++n) u.add_term(0, {n}, (n % 2 == 1) ? 1 : -1);
    return u;
}

} // namespace

SymSeries young_generating(const GraphicFunction& f, int max_weight, int limit) {
    if (max_weight > limit)
        throw budget_error("young_generating: weight exceeds limit " + std::to_string(limit));
    SymSeries out = sym_zero('m', max_weight);
    for (int n = 0; n <= max_weight; ++n) {
        for (int w = 0; w + n <= max_weight; ++w) {
            for (const IntegerPartition& lambda : partitions_of(w)) {
                if (n == 0 && length(lambda) < 2) continue;
                Graph k = complete_multipartite(with_ones(lambda, n));
                Rational value = f(k) / Rational(factorial(n) * partition_factorial(lambda));
                out.add_term(n, lambda, value);
            }
        }
    }
    return out;
}

SymSeries hp_series_closed(int max_weight, int limit) {
    if (max_weight > limit)
        throw budget_error("hp_series_closed: weight exceeds limit " + std::to_string(limit));
    SymSeries u = alternating_kernel(max_weight);
    SymSeries sum = sym_zero('p', max_weight);
    sum.add_term(0, {}, 1);
    SymSeries power = sum;  // u^0
    for (int k = 1; k <= max_weight; ++k) {
        power = multiply(power, u);
        sum = sym_add(sum, power);
    }
    return p_to_m(sum);
}

SymSeries hc_series_closed(int max_weight, int limit) {
    if (max_weight > limit)
        throw budget_error("hc_series_closed: weight exceeds limit " + std::to_string(limit));
    SymSeries u = alternating_kernel(max_weight);
    SymSeries sum = sym_zero('p', max_weight);
    SymSeries power = sym_zero('p', max_weight);
    power.add_term(0, {}, 1);
    for (int k = 1; k <= max_weight; ++k) {
        power = multiply(power, u);
        sum = sym_add(sum, sym_scale(power, Rational(1, k)));
    }
    for (int n = 1; n <= max_weight; ++n)
        sum.add_term(0, {n}, Rational((n % 2 == 0) ? 1 : -1, n));
    return p_to_m(sum);
}

namespace {

Rational multipartite_sum(int k, const IntegerPartition& lambda, bool cycles) {
    Rational total = 0;
    for (const IntegerPartition& mu : partitions_of(weight(lambda))) {
        if (!dominates(lambda, mu)) continue;
        Int l = transition_L(mu, lambda);
        if (l == 0) continue;
        Rational term = Rational(eps_sign(mu)) * Rational(multiplicity_multinomial(mu)) *
                        Rational(binomial(length(mu) + k, length(mu))) * Rational(l);
        if (cycles) term /= Rational(k + length(mu));
        total += term;
    }
    return Rational(factorial(k) * partition_factorial(lambda)) * total;
}

} // namespace

Int hp_multipartite(int k, const IntegerPartition& lambda, int limit) {
    if (k < 0) throw std::invalid_argument("hp_multipartite: k must be >= 0");
    if (k + weight(lambda) > limit)
        throw budget_error("hp_multipartite: size exceeds limit " + std::to_string(limit));
    Rational value = multipartite_sum(k, lambda, /*cycles=*/false);
    if (denominator(value) != 1) throw std::logic_error("hp_multipartite: non-integral result");
    return numerator(value);
}

Int hc_multipartite(int k, const IntegerPartition& lambda, int limit) {
    if (k + length(lambda) < 2)
        throw std::invalid_argument("hc_multipartite: requires k + l(lambda) >= 2");
    if (k + weight(lambda) > limit)
        throw budget_error("hc_multipartite: size exceeds limit " + std::to_string(limit));
    Rational value = multipartite_sum(k, lambda, /*cycles=*/true);
    if (denominator(value) != 1) throw std::logic_error("hc_multipartite: non-integral result");
    return numerator(value);
}

bool chromatic_generating_check(int q, int max_weight) {
    if (q < 0 || q > 4) throw std::invalid_argument("chromatic_generating_check: q must be in 0..4");
    SymSeries lhs = sym_zero('m', max_weight);
    for (int w = 0; w <= max_weight; ++w) {
        for (const IntegerPartition& lambda : partitions_of(w)) {
            Graph k = complete_multipartite(lambda);
            Int chi_value = chromatic_polynomial(k).eval(q);
            lhs.add_term(0, lambda, Rational(chi_value) / Rational(partition_factorial(lambda)));
        }
    }
    SymSeries base = sym_zero('p', max_weight);
    base.add_term(0, {}, 1);
    for (int n = 1; n <= max_weight; ++n) base.add_term(0, {n}, Rational(1) / Rational(factorial(n)));
    SymSeries rhs = sym_zero('p', max_weight);
    rhs.add_term(0, {}, 1);
    for (int i = 0; i < q; ++i) rhs = multiply(rhs, base);
    return lhs == p_to_m(rhs);
}

} // namespace contractad
