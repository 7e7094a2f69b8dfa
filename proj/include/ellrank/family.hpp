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

#ifndef ELLRANK_FAMILY_HPP
#define ELLRANK_FAMILY_HPP

#include "rational_function.hpp"
#include "report.hpp"
#include "two_descent.hpp"
#include "weierstrass.hpp"

#include <string>
#include <stdexcept>
#include <vector>

namespace ellrank {

using GenericCurve = WeierstrassCurve<RationalFunction>;
using GenericPoint = CurvePoint<RationalFunction>;

/// E_t : y^2 + t x y = x^3 + t x^2 - x + 1.
template <class F>
WeierstrassCurve<F> family_curve(const F& t)
{
    return WeierstrassCurve<F>(t, t, F(0), F(-1), F(1));
}

template <class F>
F quadratic_parameter(const F& u)
{
    return u * u - u - F(3);
}

/// E_{u^2-u-3}, the curve carrying (u, u+1).
template <class F>
WeierstrassCurve<F> quadratic_family_curve(const F& u)
{
    return family_curve(quadratic_parameter(u));
}

/// Left minus right side of the family equation.
template <class F>
F family_equation(const F& x, const F& y, const F& t)
{
    F lhs = y * y + t * x * y;
    F rhs = x * x * x + t * x * x - x + F(1);
    return lhs - rhs;
}

/// Closed-form j(F_u) for y^2 + u x y = x^3 + u x^2 - x + 1.
template <class F>
F family_j_closed_form(const F& u)
{
    F four_u = F(4) + u;
    F a = F(48) + u * u * four_u * four_u;
    F two_u = F(2) + u;
    F b = F(92) + (u - F(1)) * u * four_u * (F(5) + u);
    F den = two_u * two_u * b;
    using ellrank::is_zero;
    if (is_zero(den))
        throw std::domain_error("j is undefined: singular member of the family");
    return F(0) - a * a * a / den;
}

/// Closed form of x(2P) on E_{u^2-u-3} in terms of u and x = x(P).
template <class F>
F family_x_of_double(const F& u, const F& x)
{
    using ellrank::is_zero;
    F u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    F x2 = x * x, x4 = x2 * x2;
    F num = F(4) - F(2) * u + u2 + F(2) * u3 - u4 - F(8) * x + F(2) * x2 + x4;
    F den = F(4) - F(4) * x + (F(-3) + F(2) * u - u2 - F(2) * u3 + u4) * x2 + F(4) * x2 * x;
    if (is_zero(den))
        throw std::domain_error("family_x_of_double: denominator vanishes");
    return num / den;
}

inline RationalFunction rf(std::initializer_list<Rational> coeffs) { return RationalFunction(RationalPolynomial(coeffs)); }

inline RationalCurve specialize(const GenericCurve& E, const Rational& u0)
{
    return RationalCurve(E.a1().evaluate(u0), E.a2().evaluate(u0), E.a3().evaluate(u0), E.a4().evaluate(u0),
        E.a6().evaluate(u0));
}

/// Value of a Q(u)-point at u = u0; throws at a pole.
inline RationalPoint specialize(const GenericPoint& P, const Rational& u0)
{
    if (P.is_infinity())
        return RationalPoint::infinity();
    if (P.x().has_pole_at(u0) || P.y().has_pole_at(u0))
        throw std::domain_error("specialize: coordinate has a pole at u = " + u0.get_str());
    return RationalPoint(P.x().evaluate(u0), P.y().evaluate(u0));
}

inline GenericPoint generic_add(const GenericCurve& E, const GenericPoint& P, const GenericPoint& Q)
{
    return add(E, P, Q);
}

struct PointIdentity
{
    std::string name;
    std::vector<long> coeffs; // over the base points of the suite
    RationalFunction x, y;
};

namespace detail {

inline IdentityReport run_point_identities(std::string suite, const GenericCurve& E,
    const std::vector<GenericPoint>& base, const std::vector<PointIdentity>& ids)
{
    IdentityReport report{std::move(suite), {}};
    for (const auto& id : ids) {
        GenericPoint got = linear_combination(E, id.coeffs, base);
        GenericPoint want(id.x, id.y);
        bool ok = got == want && on_curve(E, got);
        std::string detail;
        if (!ok && !got.is_infinity())
            detail = "got (" + got.x().to_string() + ", " + got.y().to_string() + ")";
        report.add(id.name, ok, detail);
    }
    return report;
}

} // namespace detail

/// Combinations of (0,1), (1,1) on E_u over Q(u).
inline IdentityReport linear_parameter_identities()
{
    auto u = RationalFunction::variable();
    auto E = family_curve(u);
    std::vector<GenericPoint> base{{rf({0}), rf({1})}, {rf({1}), rf({1})}};
    std::vector<PointIdentity> ids{
        {"-(0,1) = (0,-1)", {-1, 0}, rf({0}), rf({-1})},
        {"-(1,1) = (1,-u-1)", {0, -1}, rf({1}), rf({-1, -1})},
        {"(0,1)+2(1,1) = (-u+1,-1)", {1, 2}, rf({1, -1}), rf({-1})},
        {"(0,1)+(1,1) = (-u-1,u^2+u-1)", {1, 1}, rf({-1, -1}), rf({-1, 1, 1})},
        {"(0,1)-(1,1) = (u+3,2u+5)", {1, -1}, rf({3, 1}), rf({5, 2})},
        {"-(0,1)+(1,1) = (u+3,-u^2-5u-5)", {-1, 1}, rf({3, 1}), rf({-5, -5, -1})},
        {"-(0,1)+2(1,1) = (u+5,2u+11)", {-1, 2}, rf({5, 1}), rf({11, 2})},
        {"2(1,1) = (-1,u+1)", {0, 2}, rf({-1}), rf({1, 1})},
    };
    return detail::run_point_identities("linear-parameter points", E, base, ids);
}

/// Combinations involving (u, u+1) on E_{u^2-u-3} over Q(u).
inline IdentityReport quadratic_parameter_identities()
{
    auto u = RationalFunction::variable();
    auto E = quadratic_family_curve(u);
    std::vector<GenericPoint> base{{rf({0}), rf({1})}, {rf({1}), rf({1})}, {rf({0, 1}), rf({1, 1})}};
    std::vector<PointIdentity> ids{
        {"-(u,u+1) = (u,-u^3+u^2+2u-1)", {0, 0, -1}, rf({0, 1}), rf({-1, 2, 1, -1})},
        {"(0,1)+(u,u+1) = (-u+1,u^3-2u^2-u+1)", {1, 0, 1}, rf({1, -1}), rf({1, -1, -2, 1})},
        {"(1,1)-(u,u+1) = (u^3-2u,u^4+u^3-3u^2-2u+1)", {0, 1, -1}, rf({0, -2, 0, 1}), rf({1, -2, -3, 1, 1})},
        {"2(1,1)+(u,u+1) = (-u^3+4u^2-6u+4,u^5-6u^4+14u^3-17u^2+10u-1)", {0, 2, 1}, rf({4, -6, 4, -1}),
            rf({-1, 10, -17, 14, -6, 1})},
    };
    return detail::run_point_identities("quadratic-parameter points", E, base, ids);
}

/// Family A: (t, t+1) with parameter t^2-t-3; Family B: (t, t-1) with
/// -t^2+t-1. The commonly printed -t^2+t+1 for Family B leaves -2t.
inline IdentityReport verify_family_identities()
{
    using P = RationalPolynomial;
    IdentityReport report{"families", {}};
    P t = P::x();
    P one = P::constant(1);
    P fa = family_equation(t, t + one, P{-3, -1, 1});
    report.add("Family A: f(t, t+1, t^2-t-3) = 0", fa.is_zero(), fa.is_zero() ? "" : to_string(fa, "t"));
    P fb = family_equation(t, t - one, P{-1, 1, -1});
    report.add("Family B: f(t, t-1, -t^2+t-1) = 0", fb.is_zero(), fb.is_zero() ? "" : to_string(fb, "t"));
    P fb_printed = family_equation(t, t - one, P{1, 1, -1});
    report.add("Family B with -t^2+t+1 instead leaves residual -2t", fb_printed == P{0, -2});
    auto E = family_curve(Rational(39));
    report.add("t = 7 specialization: (7,8) on E_39", on_curve(E, RationalPoint(7, 8)));
    return report;
}

/**
 * Discriminant in y of the family equation along x = a v + b with
 * t = u(v): 4(x-1)^2(x+1) + (2+u(v))^2 x^2. A rational point with that x
 * exists over Q(v) iff this is a square in Q[v].
 */
inline RationalPolynomial discriminant_condition(const Rational& a, const Rational& b, const RationalPolynomial& u_poly)
{
    if (is_zero(a))
        throw std::domain_error("discriminant_condition: a must be nonzero (constant x is a different problem)");
    using P = RationalPolynomial;
    P x{b, a};
    P one = P::constant(1);
    P two_plus_u = P::constant(2) + u_poly;
    return P::constant(4) * (x - one) * (x - one) * (x + one) + two_plus_u * two_plus_u * x * x;
}

inline IdentityReport discriminant_identities()
{
    using P = RationalPolynomial;
    IdentityReport report{"discriminant condition", {}};
    report.add("x = v, u = v^2-v-3: discriminant is a square", is_perfect_square(discriminant_condition(1, 0, P{-3, -1, 1})));
    report.add("x = v, u = -v^2+v-1: discriminant is a square", is_perfect_square(discriminant_condition(1, 0, P{-1, 1, -1})));
    bool none = true;
    for (const P& u : {P{1, 2, 0, 1}, P{-3, 0, 1, 1}, P{2, -1, 3, -2}})
        for (const auto& [a, b] : {std::pair<Rational, Rational>{1, 0}, {2, 1}, {Rational(1, 3), -1}})
            none = none && !is_perfect_square(discriminant_condition(a, b, u));
    report.add("sampled cubic u(v) with linear x: never a square", none);
    return report;
}

/// C2's quartic 2569 + 18u - 9u^2 - 18u^3 + 9u^4.
inline RationalPolynomial c2_quartic() { return RationalPolynomial{2569, 18, -9, -18, 9}; }

/// Substituting x = 1/9 into the family equation and solving for y.
inline IdentityReport verify_x19_quadratic()
{
    using P = RationalPolynomial;
    IdentityReport report{"x = 1/9 quadratic", {}};
    P t{-3, -1, 1};
    Rational x(1, 9);
    // y^2 + (t x) y - (x^3 + t x^2 - x + 1) = 0
    P lin = x * t;
    P cst = -(P::constant(x * x * x - x + 1) + (x * x) * t);
    P want_lin = Rational(1, 9) * P{-3, -1, 1};
    P want_cst = P::constant(Rational(-649, 729)) + Rational(1, 81) * P{3, 1, -1};
    report.add("linear coefficient (u^2-u-3)/9", lin == want_lin);
    report.add("constant coefficient -649/729 + (3+u-u^2)/81", cst == want_cst);
    P disc = lin * lin - P::constant(4) * cst;
    report.add("discriminant = (2569+18u-9u^2-18u^3+9u^4)/729", disc == Rational(1, 729) * c2_quartic());
    report.add("vertex -b/2 = (9+3u-3u^2)/54", Rational(-1, 2) * lin == Rational(1, 54) * P{9, 3, -3});

    Rational u7 = 7;
    Rational q7 = c2_quartic().evaluate(u7);
    report.add("q(7) = 17689 = 133^2", q7 == 17689 && exact_sqrt(q7) == Rational(133));
    auto E = quadratic_family_curve(u7);
    auto lifts = lift_x(E, x);
    Rational plus = (9 + 3 * u7 - 3 * u7 * u7 + 133) / 54;
    Rational minus = (9 + 3 * u7 - 3 * u7 * u7 - 133) / 54;
    bool roots_match = lifts.size() == 2
        && ((lifts[0].y() == plus && lifts[1].y() == minus) || (lifts[0].y() == minus && lifts[1].y() == plus));
    report.add("u = 7 roots are 8/27 and (9+21-147-133)/54", roots_match && plus == Rational(8, 27));
    return report;
}

/// The Case I curve 4 - 2u + u^2 + 2u^3 - u^4 - 8x + 2x^2 + x^4 as a monic quartic in x over Q(u).
inline BivariatePolynomial case1_quartic()
{
    return BivariatePolynomial{rf({4, -2, 1, 2, -1}), rf({-8}), rf({2}), rf({0}), rf({1})};
}

/// Coordinate change from the Case I quartic to y0^2 = x0^3 + 359/3 x0 + 3130/27.
template <class F>
std::pair<F, F> case1_map(const F& u, const F& x)
{
    F u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    F x2 = x * x, x3 = x2 * x;
    F den = u2 - u - F(1);
    F xn = F(12) * u4 - F(12) * u3 * x - F(36) * u3 + F(12) * u2 * x2 + F(30) * u2 * x + F(35) * u2
        - F(12) * u * x3 - F(24) * u * x2 - F(42) * u * x + F(61) * u + F(18) * x3 + F(6) * x2 + F(36) * x
        - F(113);
    F yn = F(8) * u5 - F(8) * u4 * x - F(32) * u4 + F(8) * u3 * x2 + F(28) * u3 * x + F(44) * u3
        - F(8) * u2 * x3 - F(24) * u2 * x2 - F(39) * u2 * x + F(9) * u2 + F(20) * u * x3 + F(20) * u * x2
        + F(43) * u * x - F(101) * u - F(19) * x3 - F(11) * x2 - F(54) * x + F(122);
    F x0 = xn / (F(3) * den);
    F y0 = F(0) - F(2) * yn / den;
    return {x0, y0};
}

inline IdentityReport case1_substitution_check()
{
    IdentityReport report{"Case I substitution", {}};
    // x0, y0 as polynomials in x over Q(u)
    using BP = BivariatePolynomial;
    RationalFunction U = RationalFunction::variable();
    RationalFunction d = U * U - U - RationalFunction(1);
    RationalFunction U2 = U * U, U3 = U2 * U, U4 = U3 * U, U5 = U4 * U;
    BP x0 = BP{RationalFunction(12) * U4 - RationalFunction(36) * U3 + RationalFunction(35) * U2
                   + RationalFunction(61) * U - RationalFunction(113),
        RationalFunction(-12) * U3 + RationalFunction(30) * U2 - RationalFunction(42) * U + RationalFunction(36),
        RationalFunction(12) * U2 - RationalFunction(24) * U + RationalFunction(6),
        RationalFunction(-12) * U + RationalFunction(18)};
    x0 = (RationalFunction(1) / (RationalFunction(3) * d)) * x0;
    BP y0 = BP{RationalFunction(8) * U5 - RationalFunction(32) * U4 + RationalFunction(44) * U3
                   + RationalFunction(9) * U2 - RationalFunction(101) * U + RationalFunction(122),
        RationalFunction(-8) * U4 + RationalFunction(28) * U3 - RationalFunction(39) * U2 + RationalFunction(43) * U
            - RationalFunction(54),
        RationalFunction(8) * U3 - RationalFunction(24) * U2 + RationalFunction(20) * U - RationalFunction(11),
        RationalFunction(-8) * U2 + RationalFunction(20) * U - RationalFunction(19)};
    y0 = (RationalFunction(-2) / d) * y0;

    BP target = y0 * y0 - x0 * x0 * x0 - BP::constant(Rational(359, 3)) * x0 - BP::constant(Rational(3130, 27));
    auto rem = divrem(target, case1_quartic()).second;
    report.add("y0^2 - (x0^3 + 359/3 x0 + 3130/27) is divisible by the quartic", rem.is_zero());

    // cross-check against the scalar form of the map
    Rational uh(1, 2), xh(1, 2);
    auto [px, py] = case1_map(uh, xh);
    report.add("(1/2,1/2) lies on the quartic", case1_quartic().evaluate(RationalFunction(xh)).evaluate(uh) == 0);
    report.add("(u,x) = (1/2,1/2) maps to (53/3, 88)", px == Rational(53, 3) && py == Rational(88));
    RationalCurve W(0, 0, 0, Rational(359, 3), Rational(3130, 27));
    report.add("(53/3, 88) on y0^2 = x0^3 + 359/3 x0 + 3130/27", on_curve(W, RationalPoint(Rational(53, 3), 88)));
    report.add("(53/3, -88) on y0^2 = x0^3 + 359/3 x0 + 3130/27", on_curve(W, RationalPoint(Rational(53, 3), -88)));
    return report;
}

/// The closed-form duplication quotient for E_{u^2-u-3} equals the one built
/// from the b-invariants, as polynomials in x over Q(u); and the 2-torsion
/// cubic is the 2-division polynomial divided by 4.
inline IdentityReport duplication_identities()
{
    using BP = BivariatePolynomial;
    IdentityReport report{"duplication", {}};
    auto U = RationalFunction::variable();
    auto E = quadratic_family_curve(U);
    BP num{rf({4, -2, 1, 2, -1}), rf({-8}), rf({2}), rf({0}), rf({1})};
    BP den{rf({4}), rf({-4}), rf({-3, 2, -1, -2, 1}), rf({4})};
    report.add("x(2P) numerator matches x^4 - b4 x^2 - 2 b6 x - b8", duplication_numerator(E) == num);
    report.add("x(2P) denominator matches 4x^3 + b2 x^2 + 2 b4 x + b6", two_division_polynomial(E) == den);
    auto cubic = family_two_torsion_cubic(U);
    report.add("2-torsion cubic = (2-division polynomial)/4",
        RationalFunction(Rational(1, 4)) * two_division_polynomial(E) == cubic);

    // x(2R) for R = (u, u+1) as a function of u
    GenericPoint R(U, U + RationalFunction(1));
    auto twice = doubled(E, R);
    report.add("x(2(u,u+1)) agrees with the closed form", twice.x() == family_x_of_double(U, U));
    return report;
}

/// j from c4^3/Delta on y^2 + u x y = x^3 + u x^2 - x + 1 against the closed form.
inline IdentityReport j_identity()
{
    IdentityReport report{"j-invariant", {}};
    auto U = RationalFunction::variable();
    auto E = family_curve(U);
    report.add("c4^3/Delta equals -(48+u^2(4+u)^2)^3/((2+u)^2(92+(u-1)u(4+u)(5+u)))",
        E.j_invariant() == family_j_closed_form(U));
    return report;
}

} // namespace ellrank

#endif
