#include "contractad/symfun.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace contractad;

namespace {

SymSeries p_term(int trunc, const IntegerPartition& mu, const Rational& c = 1) {
    SymSeries s = sym_zero('p', trunc);
    s.add_term(0, mu, c);
    return s;
}

} // namespace

TEST_CASE("partition helpers") {
    IntegerPartition lambda{3, 2, 2};
    CHECK(weight(lambda) == 7);
    CHECK(length(lambda) == 3);
    CHECK(partition_factorial(lambda) == 24);
    CHECK(eps_sign(lambda) == 1);
    CHECK(multiplicity_multinomial(lambda) == 3);  // 3!/1!2!
    CHECK(dominates({3, 1}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    CHECK(merge_parts({3, 1}, {2}) == IntegerPartition{3, 2, 1});
}

TEST_CASE("transition matrix") {
    CHECK(transition_L({1, 1, 1}, {2, 1}) == 3);
    CHECK(transition_L({2, 1}, {2, 1}) == 1);
    CHECK(transition_L({5}, {5}) == 1);
    CHECK(transition_L({2, 1}, {3}) == 1);
    CHECK(transition_L({1, 1, 1}, {1, 1, 1}) == 6);
    CHECK_THROWS_AS(transition_L({2}, {1}), std::invalid_argument);

    SUBCASE("supported exactly on dominating partitions, |lambda| <= 8") {
        for (int w = 1; w <= 8; ++w) {
            for (const auto& mu : partitions_of(w))
                for (const auto& lambda : partitions_of(w)) {
                    Int value = transition_L(mu, lambda);
                    if (!dominates(lambda, mu)) CHECK(value == 0);
                    if (mu == lambda) CHECK(value >= 1);
                }
        }
    }
}

TEST_CASE("basis conversion vs the finite-variable expansion") {
    // p_mu expanded in 6 variables must match p_to_m term by term
    const int vars = 6;
    for (int w = 1; w <= 5; ++w) {
        for (const auto& mu : partitions_of(w)) {
            SymSeries p = p_term(w, mu);
            CHECK(oracles::expand(p, vars).terms == oracles::expand(p_to_m(p), vars).terms);
        }
    }
}

TEST_CASE("p_to_m examples and round trips") {
    SymSeries p2 = p_term(4, {2});
    SymSeries m = p_to_m(p2);
    CHECK(m.coeff(0, {2}) == 1);
    CHECK(m.terms.size() == 1);

    SymSeries p11 = p_term(4, {1, 1});
    m = p_to_m(p11);
    CHECK(m.coeff(0, {2}) == 1);
    CHECK(m.coeff(0, {1, 1}) == 2);

    for (int w = 1; w <= 8; ++w) {
        for (const auto& lambda : partitions_of(w)) {
            SymSeries unit = sym_zero('m', 8);
            unit.add_term(0, lambda, Rational(5, 3));
            CHECK(p_to_m(m_to_p(unit)) == unit);
        }

        for (const auto& mu : partitions_of(w)) {
            SymSeries unit = p_term(8, mu, Rational(-7, 2));
            CHECK(m_to_p(p_to_m(unit)) == unit);
        }
    }
}

TEST_CASE("multiplication") {
    SymSeries p1 = p_term(5, {1});
    SymSeries p2 = p_term(5, {2});
    CHECK(multiply(p1, p2).coeff(0, {2, 1}) == 1);

    // (m_1)^2 = m_2 + 2 m_{1,1}
    SymSeries m1 = sym_zero('m', 5);
    m1.add_term(0, {1}, 1);
    SymSeries square = p_to_m(multiply(m_to_p(m1), m_to_p(m1)));
    CHECK(square.coeff(0, {2}) == 1);
    CHECK(square.coeff(0, {1, 1}) == 2);

    SymSeries one = sym_zero('p', 5);
    one.add_term(0, {}, 1);
    SymSeries f = multiply(p1, p2);
    CHECK(multiply(f, one) == f);
}

TEST_CASE("young series of the permutation counters match their closed forms") {
    const int N = 4;
    SUBCASE("orderings: 1/(1-(z+p_1)) - (1 + sum p_n)") {
        SymSeries direct = m_to_p(young_generating(gf_p(), N));
        SymSeries u = sym_zero('p', N);
        u.add_term(1, {}, 1);
        u.add_term(0, {1}, 1);
        SymSeries closed = sym_zero('p', N);
        SymSeries power = sym_zero('p', N);
        power.add_term(0, {}, 1);
        for (int k = 1; k <= N; ++k) {  // geometric tail, constant removed below
            power = multiply(power, u);
            closed = sym_add(closed, power);
        }
        for (int n = 1; n <= N; ++n) closed.add_term(0, {n}, -1);
        CHECK(direct == closed);
    }
    SUBCASE("cyclic orderings: -log(1-(p_1+z)) - sum p_n/n") {
        SymSeries direct = m_to_p(young_generating(gf_c(), N));
        SymSeries u = sym_zero('p', N);
        u.add_term(1, {}, 1);
        u.add_term(0, {1}, 1);
        SymSeries closed = sym_zero('p', N);
        SymSeries power = sym_zero('p', N);
        power.add_term(0, {}, 1);
        for (int k = 1; k <= N; ++k) {
            power = multiply(power, u);
            closed = sym_add(closed, sym_scale(power, Rational(1, k)));
        }
        for (int n = 1; n <= N; ++n) closed.add_term(0, {n}, Rational(-1, n));
        CHECK(direct == closed);
    }
}

TEST_CASE("young series examples") {
    SymSeries hp = young_generating(gf_hp(), 4);
    CHECK(hp.coeff(0, {1, 1}) == 2);
    CHECK(hp.coeff(1, {}) == 1);     // z * HP(P_1)
    CHECK(hp.coeff(0, {2, 2}) == 2); // 8 / (2! 2!)
    SymSeries hc = young_generating(gf_hc(), 4);
    CHECK(hc.coeff(0, {1, 1}) == 1); // the 2-vertex convention
    CHECK(hc.coeff(1, {}) == 1);     // z * HC(P_1), the loop
}

TEST_CASE("closed multipartite series match the direct young series") {
    const int N = 6;
    SymSeries hp_direct = young_generating(gf_hp(), N);
    SymSeries one_plus_p1 = sym_zero('m', N);
    one_plus_p1.add_term(0, {}, 1);
    one_plus_p1.add_term(0, {1}, 1);
    CHECK(sym_add(hp_direct, one_plus_p1) == hp_series_closed(N));
    CHECK(young_generating(gf_hc(), N) == hc_series_closed(N));

    SUBCASE("spot coefficients") {
        SymSeries hp = hp_series_closed(4);
        CHECK(hp.coeff(0, {2, 2}) == 2);
        CHECK(hp.coeff(2, {}) == 1);  // z^2 HP(K_2)/2! = 1
        SymSeries hc = hc_series_closed(4);
        CHECK(hc.coeff(0, {1, 1}) == 1);
    }
}

TEST_CASE("multipartite closed forms") {
    CHECK(hp_multipartite(0, {2, 1}) == 2);
    CHECK(hp_multipartite(0, {1, 1, 1}) == 6);
    CHECK(hc_multipartite(0, {1, 1, 1}) == 2);
    CHECK(hp_multipartite(3, {}) == 6);
    CHECK(hc_multipartite(0, {1, 1}) == 1);
    CHECK_THROWS_AS(hc_multipartite(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(hp_multipartite(20, {}), budget_error);

    SUBCASE("agree with brute force for k + |lambda| <= 6") {
        for (int total = 1; total <= 6; ++total) {
            for (int k = 0; k <= total; ++k) {
                for (const auto& lambda : partitions_of(total - k)) {
                    IntegerPartition blocks = lambda;
                    blocks.insert(blocks.end(), k, 1);
                    std::sort(blocks.begin(), blocks.end(), std::greater<int>());
                    Graph g = complete_multipartite(blocks);
                    if (g.n >= 2 && !is_connected(g)) continue;  // lone block
                    CHECK(hp_multipartite(k, lambda) == hp_count(g));
                    if (k + length(lambda) >= 2) CHECK(hc_multipartite(k, lambda) == hc_count(g));
                }
            }
        }
    }
}

TEST_CASE("functional substitution reproduces the inverse relation") {
    const int N = 5;
    SymSeries outer = m_to_p(young_generating(omega(gf_p()), N));
    SymSeries inner = m_to_p(young_generating(gf_hp(), N));
    SymSeries expected = sym_zero('p', N);
    expected.add_term(1, {}, 1);  // just z
    CHECK(substitute_z(outer, inner) == expected);
}

TEST_CASE("sign involution on young series") {
    const int N = 5;
    for (const GraphicFunction& f : {gf_p(), gf_c(), gf_hp()}) {
        SymSeries direct = m_to_p(young_generating(omega(f), N));
        SymSeries twisted = omega_transform(m_to_p(young_generating(f, N)));
        CHECK(direct == twisted);
    }
}

TEST_CASE("chromatic generating identity") {
    CHECK(chromatic_generating_check(0, 4));
    CHECK(chromatic_generating_check(1, 4));
    CHECK(chromatic_generating_check(2, 4));
    CHECK_THROWS_AS(chromatic_generating_check(9, 3), std::invalid_argument);
}
