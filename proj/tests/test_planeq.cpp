#include "contractad/planeq.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace contractad;

namespace {

// tuples on path vertices 0..n-1 <-> 1-based permutations
DirectedSequence to_zero_based(const Pattern& p) {
    DirectedSequence out;
    for (int v : p) out.push_back(v - 1);
    return out;
}

} // namespace

TEST_CASE("is_planeq membership") {
    Graph p4 = path_graph(4);
    CHECK_FALSE(is_planeq(p4, to_zero_based({3, 1, 4, 2})));
    CHECK_FALSE(is_planeq(p4, to_zero_based({2, 4, 1, 3})));
    CHECK(is_planeq(path_graph(3), to_zero_based({2, 1, 3})));
    CHECK(planeq_tuples(path_graph(3)).size() == 6);

    Graph k4 = complete_graph(4);
    DirectedSequence perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        CHECK(is_planeq(k4, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(is_planeq(p4, DirectedSequence{0, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_planeq(p4, DirectedSequence{0, 1}), std::invalid_argument);
}

TEST_CASE("planeq counts") {
    long long expected[] = {0, 1, 2, 6, 22, 90, 394};
    for (int n = 1; n <= 6; ++n) CHECK(planeq_count(path_graph(n)) == expected[n]);
    CHECK(planeq_count(cycle_graph(5)) == 110);
}

TEST_CASE("membership routes agree") {
    SUBCASE("first-pair greedy vs last-pair greedy vs top-down, n <= 5") {
        for (int n = 1; n <= 5; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                DirectedSequence perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    bool first = is_planeq(g, perm);
                    CHECK(first == oracles::planeq_greedy_last(g, perm));
                    CHECK(first == oracles::planeq_topdown(g, perm));
                } while (std::next_permutation(perm.begin(), perm.end()));
            });
        }
    }
    SUBCASE("first-pair vs last-pair, full n = 6") {
        for_each_connected_graph(6, [&](const Graph& g) {
            DirectedSequence perm(6);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                CHECK(is_planeq(g, perm) == oracles::planeq_greedy_last(g, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
}

TEST_CASE("subset DP count agrees with the filter count") {
    for (int n = 1; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            CHECK(planeq_count_dp(g) == static_cast<long long>(planeq_tuples(g).size()));
        });
    }
    // seeded samples at n = 6 and 7
    std::mt19937 rng(7);
    for (int n = 6; n <= 7; ++n) {
        int pairs = n * (n - 1) / 2;
        std::uniform_int_distribution<std::uint32_t> dist(0, (1u << pairs) - 1);
        int done = 0;
        while (done < 60) {
            std::uint32_t mask = dist(rng);
            Graph g(n);
            int b = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++b)
                    if ((mask >> b) & 1) g.add_edge(u, v);
            if (!is_connected(g)) continue;
            CHECK(planeq_count_dp(g) == static_cast<long long>(planeq_tuples(g).size()));
            ++done;
        }
    }
    // the DP also reaches past the n! budget
    CHECK(planeq_count_dp(path_graph(10)) == 206098);  // tenth separable count
}

TEST_CASE("cyceq membership and counts") {
    CHECK(cyceq_count(path_graph(2)) == 1);
    CHECK(cyceq_count(path_graph(1)) == 1);
    CHECK(cyceq_count(complete_graph(3)) == 2);

    SUBCASE("cyclic membership = some rotation is realizable, n <= 5") {
        for (int n = 2; n <= 5; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                DirectedSequence rest(n - 1);
                std::iota(rest.begin(), rest.end(), 1);
                do {
                    CyclicSequence c;
                    c.rep.push_back(0);
                    c.rep.insert(c.rep.end(), rest.begin(), rest.end());
                    bool any_rotation = false;
                    for (int r = 0; r < n && !any_rotation; ++r) {
                        DirectedSequence rot(c.rep.begin() + r, c.rep.end());
                        rot.insert(rot.end(), c.rep.begin(), c.rep.begin() + r);
                        any_rotation = is_planeq(g, rot);
                    }
                    CHECK(is_cyceq(g, c) == any_rotation);
                } while (std::next_permutation(rest.begin(), rest.end()));
            });
        }
    }
}

TEST_CASE("is_separable") {
    CHECK_FALSE(is_separable({2, 4, 1, 3}));
    CHECK_FALSE(is_separable({3, 1, 4, 2}));
    for (int n = 1; n <= 8; ++n) {
        Pattern id(n);
        std::iota(id.begin(), id.end(), 1);
        CHECK(is_separable(id));
    }
    // all 22 separable 4-permutations match the brute-force pattern filter
    auto separable_four = avoider_list(4, b_p_patterns());
    CHECK(separable_four.size() == 22);
    Pattern perm{1, 2, 3, 4};
    do {
        bool in_list = std::find(separable_four.begin(), separable_four.end(), perm) !=
                       separable_four.end();
        CHECK(is_separable(perm) == in_list);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("contains_pattern") {
    CHECK(contains_pattern({2, 4, 1, 3}, {2, 4, 1, 3}));
    CHECK_FALSE(contains_pattern({1, 2, 3}, {2, 1}));
    CHECK(contains_pattern({3, 5, 1, 4, 2}, {3, 1, 4, 2}));
    CHECK_FALSE(contains_pattern({2, 1}, {2, 4, 1, 3}));
}

TEST_CASE("avoiders") {
    CHECK(avoiders(4, b_p_patterns()) == 22);
    CHECK(avoiders(1, b_p_patterns()) == 1);
    CHECK(avoiders(5, b_c_patterns()) == 110);
    CHECK(avoiders(5, b_c_patterns()) == 5 * avoiders(4, b_p_patterns()));
}

TEST_CASE("b_c_patterns") {
    auto bc = b_c_patterns();
    CHECK(bc.size() == 10);
    CHECK(std::find(bc.begin(), bc.end(), Pattern{1, 3, 5, 2, 4}) != bc.end());
    CHECK(std::find(bc.begin(), bc.end(), Pattern{1, 2, 3, 4, 5}) == bc.end());
}

TEST_CASE("separable = B_P-avoiding = realizable on paths, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<Pattern> av;
        for (const auto& p : avoider_list(n, b_p_patterns())) av.insert(p);
        std::set<Pattern> sep;
        Pattern perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            if (is_separable(perm)) sep.insert(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::set<Pattern> realizable;
        for (const auto& t : planeq_tuples(path_graph(n))) {
            Pattern p;
            for (int v : t) p.push_back(v + 1);
            realizable.insert(p);
        }
        CHECK(av == sep);
        CHECK(av == realizable);
    }
}

TEST_CASE("realizable on cycles = B_C-avoiding, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<Pattern> av;
        for (const auto& p : avoider_list(n, b_c_patterns())) av.insert(p);
        std::set<Pattern> realizable;
        for (const auto& t : planeq_tuples(cycle_graph(n))) {
            Pattern p;
            for (int v : t) p.push_back(v + 1);
            realizable.insert(p);
        }
        CHECK(av == realizable);
        if (n <= 4) CHECK(static_cast<long long>(av.size()) == to_longlong(factorial(n)));
    }
}

TEST_CASE("lower bound: PE >= acyclic orientations, equality iff complete, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        int full = n * (n - 1) / 2;
        for_each_connected_graph(n, [&](const Graph& g) {
            Int pe = planeq_count(g);
            Int bound = acyclic_orientation_count(g);
            CHECK(pe >= bound);
            CHECK((pe == bound) == (g.edge_count() == full));
        });
    }
}

TEST_CASE("realizability is closed under substitution, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            for (VertexSet tube : tubes(g)) {
                auto [host, blocks] = contract_tube(g, tube);
                int slot = -1;
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    if (blocks[i] == tube) slot = static_cast<int>(i);
                auto members = vertices_of(tube);
                for (const auto& outer : planeq_tuples(host)) {
                    for (const auto& inner : planeq_tuples(induced(g, tube))) {
                        DirectedSequence spliced;
                        for (int label : outer) {
                            if (label == slot)
                                for (int w : inner) spliced.push_back(members[w]);
                            else
                                spliced.push_back(vertices_of(blocks[label])[0]);
                        }
                        CHECK(is_planeq(g, spliced));
                    }
                }
            }
        });
    }
}
