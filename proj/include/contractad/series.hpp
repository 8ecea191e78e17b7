#ifndef CONTRACTAD_SERIES_HPP
#define CONTRACTAD_SERIES_HPP

#include "contractad/graphic_functions.hpp"

#include <vector>

namespace contractad {

/// Truncated power series in t with exact rational coefficients.
/// coeffs[k] is the t^k coefficient; everything beyond the order is cut.
struct RationalSeries {
    std::vector<Rational> coeffs;  // size order+1

    explicit RationalSeries(int order = 0) : coeffs(order + 1, Rational(0)) {}
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational at(int k) const { return k <= order() ? coeffs[k] : Rational(0); }
    bool operator==(const RationalSeries& other) const { return coeffs == other.coeffs; }
};

RationalSeries series_t(int order);  // the series t
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const RationalSeries& a, const Rational& c);

/// Multiplicative inverse; requires a nonzero constant term.
RationalSeries series_inverse(const RationalSeries& a);

/// Composition outer(inner); requires inner constant term 0.
RationalSeries compose(const RationalSeries& outer, const RationalSeries& inner);

/// Square root by Newton iteration; requires constant term 1.
RationalSeries series_sqrt(const RationalSeries& a);

/// Logarithm via log(f) = integral of f'/f; requires constant term 1.
RationalSeries series_log(const RationalSeries& a);

/// sum f(P_n) t^n for n = 1..order.
RationalSeries ogf_path(const GraphicFunction& f, int order,
                        int limit = default_limits().series_order);

/// sum f(C_n) t^n / n, with the family convention C_1 = P_1, C_2 = P_2.
RationalSeries ogf_cycle(const GraphicFunction& f, int order,
                         int limit = default_limits().series_order);

/// Hertzsprung numbers H_n (no rising or falling successions):
/// sum H_n t^n = sum n! ((t - t^2)/(1 + t))^n.
RationalSeries hertzsprung(int order, int limit = default_limits().series_order);

/// The displayed series sum CH_n t^n / n for the cyclic problem:
/// 3t^2/2 + sum ((n-1)!/n) u^n + sum_{n>=3} (-1)^n 2 t^n / n, u = (t-t^2)/(1+t).
RationalSeries cyclic_hertzsprung(int order, int limit = default_limits().series_order);

/// CH_n as integers (coefficient times n).
std::vector<Int> cyclic_hertzsprung_numbers(int order, int limit = default_limits().series_order);

/// Little Schroeder numbers: (1 - t - sqrt(t^2 - 6t + 1)) / 2.
RationalSeries schroder_series(int order, int limit = default_limits().series_order);

} // namespace contractad

#endif
