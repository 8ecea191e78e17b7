#include "contractad/series.hpp"

#include "contractad/hamiltonian.hpp"
#include "contractad/planeq.hpp"

#include <doctest.h>

using namespace contractad;

namespace {

RationalSeries from_ints(std::initializer_list<long long> coeffs) {
    RationalSeries s(static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (long long c : coeffs) s.coeffs[k++] = c;
    return s;
}

} // namespace

TEST_CASE("series primitives") {
    RationalSeries one(6);
    one.coeffs[0] = 1;
    CHECK(series_sqrt(one) == one);
    CHECK(series_mul(series_inverse(from_ints({1, 1})), from_ints({1, 1})) == from_ints({1, 0}));

    RationalSeries log_of_one = series_log(one);
    for (auto& c : log_of_one.coeffs) CHECK(c == 0);

    // log(1+t) = t - t^2/2 + t^3/3 - ...
    RationalSeries lg = series_log(from_ints({1, 1, 0, 0}));
    CHECK(lg.coeffs[1] == 1);
    CHECK(lg.coeffs[2] == Rational(-1, 2));
    CHECK(lg.coeffs[3] == Rational(1, 3));

    // sqrt(1+t)^2 = 1+t
    RationalSeries root = series_sqrt(from_ints({1, 1, 0, 0, 0, 0}));
    CHECK(series_mul(root, root) == from_ints({1, 1, 0, 0, 0, 0}));

    RationalSeries bad(3);
    bad.coeffs[0] = 2;
    CHECK_THROWS_AS(series_sqrt(bad), std::invalid_argument);
    CHECK_THROWS_AS(series_log(bad), std::invalid_argument);
    bad.coeffs[0] = 0;
    CHECK_THROWS_AS(series_inverse(bad), std::invalid_argument);
}

TEST_CASE("composition") {
    RationalSeries f = from_ints({0, 1, 4, 2, 7});
    CHECK(compose(f, series_t(4)) == f);
    CHECK_THROWS_AS(compose(f, from_ints({1, 1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("path and cycle generating series") {
    CHECK(ogf_path(gf_hp(), 5) == from_ints({0, 1, 2, 2, 2, 2}));

    // (t - t^2)/(1 + t) = t - 2t^2 + 2t^3 - 2t^4 + ...
    RationalSeries omega_hp = ogf_path(omega(gf_hp()), 5);
    CHECK(omega_hp == from_ints({0, 1, -2, 2, -2, 2}));

    RationalSeries fc_pe = ogf_cycle(gf_pe(), 3);
    CHECK(fc_pe.coeffs[1] == 1);
    CHECK(fc_pe.coeffs[2] == 1);
    CHECK(fc_pe.coeffs[3] == 2);
}

TEST_CASE("compositional inverses from the convolution identities, order 7") {
    RationalSeries w_hp = ogf_path(omega(gf_hp()), 7);
    RationalSeries pe = ogf_path(gf_pe(), 7);
    CHECK(compose(w_hp, pe) == series_t(7));
    RationalSeries w_pe = ogf_path(omega(gf_pe()), 7);
    RationalSeries hp = ogf_path(gf_hp(), 7);
    CHECK(compose(w_pe, hp) == series_t(7));
}

TEST_CASE("hertzsprung") {
    RationalSeries h = hertzsprung(7);
    CHECK(h == from_ints({0, 1, 0, 0, 2, 14, 90, 646}));
    for (int n = 1; n <= 8; ++n)
        CHECK(hertzsprung(8).coeffs[n] == hp_count(complement(path_graph(n))));
}

TEST_CASE("hertzsprung series is the succession-free composition") {
    // sum n! t^n composed with (t - t^2)/(1 + t) equals the series of
    // Hamiltonian path counts in complements of paths
    const int N = 8;
    RationalSeries perms(N);
    for (int n = 1; n <= N; ++n) perms.coeffs[n] = Rational(factorial(n));
    RationalSeries composed = compose(perms, ogf_path(omega(gf_hp()), N));
    CHECK(composed == ogf_path(gf_hp_bar(), N));
}

TEST_CASE("cyclic hertzsprung") {
    auto numbers = cyclic_hertzsprung_numbers(8);
    CHECK(numbers[5] == 2);
    CHECK(numbers[6] == 6);
    CHECK(numbers[7] == 46);
    CHECK(numbers[8] == 354);
    CHECK(numbers[1] == 1);
    CHECK(numbers[2] == 0);
    CHECK(numbers[3] == 0);
    CHECK(numbers[4] == 0);
    for (int n = 5; n <= 8; ++n) {
        Graph comp = complement(cycle_graph(n));
        CHECK(numbers[n] == hc_count(comp));
    }
}

TEST_CASE("the four-term combination reproduces complement cycle counts, order 8") {
    const int N = 8;
    RationalSeries w_hp = ogf_path(omega(gf_hp()), N);
    RationalSeries fc_c = ogf_cycle(gf_c(), N);
    RationalSeries rhs = series_sub(compose(fc_c, w_hp), w_hp);
    rhs = series_add(rhs, ogf_cycle(omega(gf_hp()), N));
    rhs = series_sub(rhs, ogf_cycle(omega(gf_hc()), N));
    CHECK(rhs == ogf_cycle(gf_hc_bar(), N));
}

TEST_CASE("schroder series") {
    RationalSeries s = schroder_series(6);
    CHECK(s == from_ints({0, 1, 2, 6, 22, 90, 394}));
    CHECK(schroder_series(7) == ogf_path(gf_pe(), 7));

    SUBCASE("closed form of the cycle series of realizable tuples") {
        const int N = 7;
        RationalSeries radicand(N);
        radicand.coeffs[0] = 1;
        radicand.coeffs[1] = -6;
        radicand.coeffs[2] = 1;
        RationalSeries root = series_sqrt(radicand);
        RationalSeries t = series_t(N);
        // (3t - t^2 - t sqrt(t^2-6t+1)) / 2
        RationalSeries closed = series_scale(
            series_sub(series_sub(series_scale(t, 3), series_mul(t, t)), series_mul(t, root)),
            Rational(1, 2));
        CHECK(closed == ogf_cycle(gf_pe(), N));
        CHECK(closed.coeffs[3] == 2);  // 6/3
    }

    SUBCASE("avoider counts on cycles vs shifted schroder") {
        RationalSeries s7 = schroder_series(7);
        for (int n = 2; n <= 6; ++n) {
            Rational expected = s7.coeffs[n - 1] * n;
            CHECK(Rational(planeq_count(cycle_graph(n))) == expected);
        }
    }
}

TEST_CASE("series budgets") {
    CHECK_THROWS_AS(hertzsprung(100), budget_error);
    CHECK_THROWS_AS(ogf_path(gf_hp(), -1), std::invalid_argument);
}
