#include "contractad/series.hpp"

#include <stdexcept>

namespace contractad {

namespace {

void check_order(int order, int limit, const char* who) {
    if (order < 0) throw std::invalid_argument(std::string(who) + ": order must be >= 0");
    if (order > limit)
        throw budget_error(std::string(who) + ": order exceeds limit " + std::to_string(limit));
}

} // namespace

RationalSeries series_t(int order) {
    RationalSeries s(order);
    if (order >= 1) s.coeffs[1] = 1;
    return s;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
    return r;
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs[k] = a.coeffs[k] - b.coeffs[k];
    return r;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j)
            if (b.coeffs[j] != 0) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

RationalSeries series_scale(const RationalSeries& a, const Rational& c) {
    RationalSeries r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

RationalSeries series_inverse(const RationalSeries& a) {
    if (a.coeffs[0] == 0) throw std::invalid_argument("series_inverse: constant term must be nonzero");
    RationalSeries r(a.order());
    r.coeffs[0] = 1 / a.coeffs[0];
    for (int k = 1; k <= r.order(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += a.coeffs[j] * r.coeffs[k - j];
        r.coeffs[k] = -acc / a.coeffs[0];
    }
    return r;
}

RationalSeries compose(const RationalSeries& outer, const RationalSeries& inner) {
    if (inner.coeffs[0] != 0)
        throw std::invalid_argument("compose: inner constant term must vanish");
    int order = std::min(outer.order(), inner.order());
    RationalSeries r(order);
    for (int k = outer.order(); k >= 0; --k) {
        // Horner step: r = r * inner + outer_k
        r = series_mul(r, inner);
        r.coeffs[0] += outer.coeffs[k];
    }
    return r;
}

RationalSeries series_sqrt(const RationalSeries& a) {
    if (a.coeffs[0] != 1) throw std::invalid_argument("series_sqrt: constant term must be 1");
    RationalSeries y(a.order());
    y.coeffs[0] = 1;
    // Newton: y <- (y + a/y) / 2; each pass doubles the correct prefix.
    int correct = 1;
    while (correct <= a.order()) {
        y = series_scale(series_add(y, series_mul(a, series_inverse(y))), Rational(1, 2));
        correct *= 2;
    }
    return y;
}

RationalSeries series_log(const RationalSeries& a) {
    if (a.coeffs[0] != 1) throw std::invalid_argument("series_log: constant term must be 1");
    // log(a) = integral of a'/a
    RationalSeries deriv(a.order());
    for (int k = 0; k + 1 <= a.order(); ++k) deriv.coeffs[k] = a.coeffs[k + 1] * (k + 1);
    RationalSeries quotient = series_mul(deriv, series_inverse(a));
    RationalSeries r(a.order());
    for (int k = 1; k <= a.order(); ++k) r.coeffs[k] = quotient.coeffs[k - 1] / k;
    return r;
}

RationalSeries ogf_path(const GraphicFunction& f, int order, int limit) {
    check_order(order, limit, "ogf_path");
    RationalSeries r(order);
    for (int n = 1; n <= order; ++n) r.coeffs[n] = f(path_graph(n));
    return r;
}

RationalSeries ogf_cycle(const GraphicFunction& f, int order, int limit) {
    check_order(order, limit, "ogf_cycle");
    RationalSeries r(order);
    for (int n = 1; n <= order; ++n) r.coeffs[n] = f(cycle_graph(n)) / n;
    return r;
}

namespace {

// (t - t^2) / (1 + t) = t - 2t^2 + 2t^3 - 2t^4 + ...
RationalSeries succession_kernel(int order) {
    RationalSeries num(order), den(order);
    if (order >= 1) num.coeffs[1] = 1;
    if (order >= 2) num.coeffs[2] = -1;
    den.coeffs[0] = 1;
    if (order >= 1) den.coeffs[1] = 1;
    return series_mul(num, series_inverse(den));
}

} // namespace

RationalSeries hertzsprung(int order, int limit) {
    check_order(order, limit, "hertzsprung");
    RationalSeries u = succession_kernel(order);
    RationalSeries sum(order);
    RationalSeries power(order);
    power.coeffs[0] = 1;
    Int nfact = 1;
    for (int n = 1; n <= order; ++n) {
        nfact *= n;
        power = series_mul(power, u);
        sum = series_add(sum, series_scale(power, Rational(nfact)));
    }
    return sum;
}

RationalSeries cyclic_hertzsprung(int order, int limit) {
    check_order(order, limit, "cyclic_hertzsprung");
    RationalSeries u = succession_kernel(order);
    RationalSeries sum(order);
    if (order >= 2) sum.coeffs[2] = Rational(3, 2);
    RationalSeries power(order);
    power.coeffs[0] = 1;
    Int nfact = 1;  // (n-1)!
    for (int n = 1; n <= order; ++n) {
        if (n >= 2) nfact *= (n - 1);
        power = series_mul(power, u);
        sum = series_add(sum, series_scale(power, Rational(nfact, n)));
    }
    for (int n = 3; n <= order; ++n)
        sum.coeffs[n] += Rational((n % 2 == 0) ? 2 : -2, n);
    return sum;
}

std::vector<Int> cyclic_hertzsprung_numbers(int order, int limit) {
    RationalSeries s = cyclic_hertzsprung(order, limit);
    std::vector<Int> out(order + 1, 0);
    for (int n = 1; n <= order; ++n) {
        Rational v = s.coeffs[n] * n;
        if (denominator(v) != 1)
            throw std::logic_error("cyclic_hertzsprung: non-integral count at n=" + std::to_string(n));
        out[n] = numerator(v);
    }
    return out;
}

RationalSeries schroder_series(int order, int limit) {
    check_order(order, limit, "schroder_series");
    RationalSeries radicand(order);
    radicand.coeffs[0] = 1;
    if (order >= 1) radicand.coeffs[1] = -6;
    if (order >= 2) radicand.coeffs[2] = 1;
    RationalSeries root = series_sqrt(radicand);
    RationalSeries r(order);
    r.coeffs[0] = Rational(1) - root.coeffs[0];  // = 0
    for (int k = 1; k <= order; ++k) r.coeffs[k] = -root.coeffs[k];
    if (order >= 1) r.coeffs[1] -= 1;
    return series_scale(r, Rational(1, 2));
}

} // namespace contractad
