/*
   Copyright 2026 The ellrank Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELLRANK_HEIGHTS_HPP
#define ELLRANK_HEIGHTS_HPP

#include "weierstrass.hpp"

#include <boost/numeric/interval.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellrank {

/// full: lim h(x(2^n P)) / 4^n. half: one half of that.
enum class HeightConvention { full, half };

inline std::string to_string(HeightConvention c) { return c == HeightConvention::full ? "full" : "half"; }

inline HeightConvention parse_convention(const std::string& s)
{
    if (s == "full")
        return HeightConvention::full;
    if (s == "half")
        return HeightConvention::half;
    throw std::invalid_argument("unknown height convention: " + s);
}

/// Convention under which the regulator of (0,1),(1,1),(7,8),(1/9,8/27) at
/// u = 7 comes out as 8.61. The half convention gives 8.61/16.
inline constexpr HeightConvention default_convention = HeightConvention::full;

struct HeightOptions
{
    double tolerance = 1e-4;
    int doubling_cap = 9;
    HeightConvention convention = default_convention;
};

struct HeightEstimate
{
    double value = 0.0;
    double error_bound = 0.0;
    int doublings_used = 0;
    HeightConvention convention = default_convention;
    bool converged = true;     // error_bound met the requested tolerance
    bool sign_determined = true; // regulators: the interval excludes 0

    double lower() const { return value - error_bound; }
    double upper() const { return value + error_bound; }

    bool operator==(const HeightEstimate&) const = default;
};

/// log max(|num(x)|, den(x)).
inline double naive_height(const RationalPoint& P)
{
    if (P.is_infinity())
        throw std::domain_error("naive height of the point at infinity");
    const Rational& x = P.x();
    Integer a = abs(x.get_num());
    const Integer den(x.get_den());
    if (a == 0 && den == 1)
        return 0.0;
    return std::max(log_abs(a), log_abs(den));
}

namespace detail {

/// Model with integral coefficients, a_i scaled by d^i; points map by (d^2 x, d^3 y).
struct IntegralModel
{
    RationalCurve curve;
    Integer d;

    RationalPoint map(const RationalPoint& P) const
    {
        if (P.is_infinity())
            return P;
        Rational d2(d * d), d3(d * d * d);
        return RationalPoint(d2 * P.x(), d3 * P.y());
    }
};

inline IntegralModel integral_model(const RationalCurve& E)
{
    Integer d = 1;
    for (const Rational* a : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()})
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a->get_den_mpz_t());
    Rational r(d), r2 = r * r, r3 = r2 * r;
    RationalCurve S(r * E.a1(), r2 * E.a2(), r3 * E.a3(), r2 * r2 * E.a4(), r3 * r3 * E.a6());
    return IntegralModel{std::move(S), std::move(d)};
}

inline double log_height(const Rational& q)
{
    if (q == 0)
        return 0.0;
    return std::max(log_abs(Integer(q.get_num())), log_abs(Integer(q.get_den())));
}

inline double log_plus(const Rational& q)
{
    if (q == 0)
        return 0.0;
    return std::max(0.0, log_abs(Integer(q.get_num())) - log_abs(Integer(q.get_den())));
}

/**
 * Uniform bound B with |h^(P) - h(x(P))| <= B for every P on an integral
 * model, full convention. Silverman's difference bound for the half
 * normalization, doubled; of the two published variants for the j-term
 * the larger one is used on each side.
 */
inline double height_difference_bound(const RationalCurve& E)
{
    auto inv = E.invariants();
    double hj = log_height(inv.j);
    double two_star = inv.b2 == 0 ? 1.0 : 2.0;
    double mu = log_abs(Integer(abs(inv.discriminant.get_num()))) / 12.0 + log_plus(inv.j) / 12.0
        + log_plus(inv.b2 / Rational(12)) / 2.0 + std::log(two_star) / 2.0;
    double lower = hj / 8.0 + mu + 0.973;
    double upper = hj / 12.0 + mu + 1.07;
    return 2.0 * std::max(lower, upper);
}

} // namespace detail

/**
 * Canonical height as the limit of h(2^n P)/4^n with every doubling done
 * in exact arithmetic on an integral model. With B the uniform bound on
 * |h^ - h|, each step confines h^(P) to [(h(2^m P) - B)/4^m, (h(2^m P) + B)/4^m];
 * the estimate is the centre of the intersection of these intervals and the
 * error bound is its half-width. Iteration stops once that is below the
 * tolerance or at the doubling cap. Torsion is detected when the doubling
 * orbit returns to O or to an earlier point, and then the value is 0.
 */
inline HeightEstimate canonical_height(const RationalCurve& E, const RationalPoint& P, const HeightOptions& opts = {})
{
    if (!on_curve(E, P))
        throw std::invalid_argument("canonical_height: point not on curve");
    HeightEstimate est;
    est.convention = opts.convention;
    double scale = opts.convention == HeightConvention::full ? 1.0 : 0.5;
    if (P.is_infinity())
        return est;

    auto model = detail::integral_model(E);
    const RationalCurve& M = model.curve;
    double B = detail::height_difference_bound(M);
    RationalPoint Q = model.map(P);
    std::vector<RationalPoint> orbit{Q};
    double lo = -INFINITY, hi = INFINITY;
    for (int n = 0;; ++n) {
        if (n > 0) {
            Q = doubled(M, Q);
            est.doublings_used = n;
            if (Q.is_infinity() || std::find(orbit.begin(), orbit.end(), Q) != orbit.end()) {
                est.value = 0.0;
                est.error_bound = 0.0;
                est.converged = true;
                return est;
            }
            orbit.push_back(Q);
        }
        double h = naive_height(Q);
        double slack = B + 1e-12 * (h + 1.0); // ulp slack on the logarithm
        lo = std::max({lo, std::ldexp(h - slack, -2 * n), 0.0});
        hi = std::min(hi, std::ldexp(h + slack, -2 * n));
        if ((hi - lo) / 2.0 * scale < opts.tolerance || n >= opts.doubling_cap)
            break;
    }
    est.value = (lo + hi) / 2.0 * scale;
    est.error_bound = (hi - lo) / 2.0 * scale;
    est.converged = est.error_bound < opts.tolerance;
    return est;
}

/// <P,Q> = (h(P+Q) - h(P) - h(Q)) / 2 from already computed heights.
inline HeightEstimate pairing_from_heights(const HeightEstimate& sum, const HeightEstimate& hp, const HeightEstimate& hq)
{
    HeightEstimate out;
    out.convention = sum.convention;
    out.value = (sum.value - hp.value - hq.value) / 2.0;
    out.error_bound = (sum.error_bound + hp.error_bound + hq.error_bound) / 2.0;
    out.doublings_used = std::max({sum.doublings_used, hp.doublings_used, hq.doublings_used});
    out.converged = sum.converged && hp.converged && hq.converged;
    return out;
}

inline HeightEstimate height_pairing(const RationalCurve& E, const RationalPoint& P, const RationalPoint& Q,
    const HeightOptions& opts = {})
{
    return pairing_from_heights(canonical_height(E, add(E, P, Q), opts), canonical_height(E, P, opts),
        canonical_height(E, Q, opts));
}

using Interval = boost::numeric::interval<double>;

namespace detail {

inline Interval interval_determinant(const std::vector<std::vector<Interval>>& m)
{
    size_t n = m.size();
    if (n == 0)
        return Interval(1.0);
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Interval acc(0.0);
    for (size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Interval>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Interval> row;
            for (size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Interval term = m[0][col] * interval_determinant(minor);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace detail

struct RegulatorResult
{
    HeightEstimate regulator;
    std::vector<std::vector<HeightEstimate>> gram;
};

/**
 * det of the height-pairing Gram matrix. Entries enter as intervals
 * [value - err, value + err]; the determinant is evaluated by cofactor
 * expansion in outward-rounded interval arithmetic.
 */
inline RegulatorResult regulator_with_gram(const RationalCurve& E, const std::vector<RationalPoint>& points,
    const HeightOptions& opts = {})
{
    size_t k = points.size();
    std::vector<HeightEstimate> single(k);
    for (size_t i = 0; i < k; ++i)
        single[i] = canonical_height(E, points[i], opts);
    RegulatorResult res;
    res.gram.assign(k, std::vector<HeightEstimate>(k));
    for (size_t i = 0; i < k; ++i) {
        res.gram[i][i] = single[i];
        for (size_t j = i + 1; j < k; ++j) {
            auto sum = canonical_height(E, add(E, points[i], points[j]), opts);
            res.gram[i][j] = res.gram[j][i] = pairing_from_heights(sum, single[i], single[j]);
        }
    }
    std::vector<std::vector<Interval>> m(k, std::vector<Interval>(k));
    bool converged = true;
    int doublings = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const auto& g = res.gram[i][j];
            Interval centre(g.value);
            m[i][j] = centre + Interval(-g.error_bound, g.error_bound);
            converged = converged && g.converged;
            doublings = std::max(doublings, g.doublings_used);
        }
    Interval det = detail::interval_determinant(m);
    auto& r = res.regulator;
    r.convention = opts.convention;
    r.value = boost::numeric::median(det);
    r.error_bound = boost::numeric::width(det) / 2.0;
    r.doublings_used = doublings;
    r.converged = converged;
    r.sign_determined = !boost::numeric::zero_in(det);
    return res;
}

inline HeightEstimate regulator(const RationalCurve& E, const std::vector<RationalPoint>& points,
    const HeightOptions& opts = {})
{
    return regulator_with_gram(E, points, opts).regulator;
}

} // namespace ellrank

#endif
