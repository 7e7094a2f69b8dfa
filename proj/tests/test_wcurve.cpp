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

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ellrank;
using namespace ellrank::testing;

namespace {

RationalCurve e39() { return family_curve(Rational(39)); }

std::vector<RationalPoint> theorem_points_u7() { return {{0, 1}, {1, 1}, {7, 8}, {Rational(1, 9), Rational(8, 27)}}; }

} // namespace

TEST(WCurve, OnCurve)
{
    auto E = e39();
    for (const auto& P : theorem_points_u7())
        EXPECT_TRUE(on_curve(E, P));
    EXPECT_TRUE(on_curve(E, RationalPoint::infinity()));
    EXPECT_FALSE(on_curve(E, RationalPoint(7, 9)));
    EXPECT_EQ(E, quadratic_family_curve(Rational(7)));
}

TEST(WCurve, RejectsSingular)
{
    EXPECT_THROW(RationalCurve(0, 0, 0, 0, 0), SingularCurve);
    EXPECT_THROW(RationalCurve(0, 0, 0, -3, 2), SingularCurve); // (x-1)^2 (x+2)
}

TEST(WCurve, NegateAndAddOnExamples)
{
    Rational t = 5;
    auto E = family_curve(t);
    RationalPoint A(0, 1), B(1, 1);
    EXPECT_EQ(negate(E, A), RationalPoint(0, -1));
    EXPECT_EQ(negate(E, B), RationalPoint(1, -t - 1));
    EXPECT_TRUE(negate(E, RationalPoint::infinity()).is_infinity());
    EXPECT_EQ(add(E, A, B), RationalPoint(-t - 1, t * t + t - 1));
    EXPECT_EQ(doubled(E, B), RationalPoint(-1, t + 1));
    EXPECT_EQ(subtract(E, A, B), RationalPoint(t + 3, 2 * t + 5));
    EXPECT_EQ(add(E, A, scalar_mul(E, 2, B)), RationalPoint(-t + 1, -1));
    EXPECT_TRUE(add(E, A, negate(E, A)).is_infinity());
}

TEST(WCurve, ScalarMul)
{
    auto C1 = c1_curve();
    C1Basis b;
    EXPECT_TRUE(scalar_mul(C1, 2, b.torsion).is_infinity());
    EXPECT_EQ(scalar_mul(C1, 1, b.p1), b.p1);
    EXPECT_TRUE(scalar_mul(C1, 0, b.p1).is_infinity());
    EXPECT_EQ(scalar_mul(C1, -3, b.p1), negate(C1, scalar_mul(C1, 3, b.p1)));
    EXPECT_EQ(scalar_mul(C1, 5, b.p2), add(C1, scalar_mul(C1, 2, b.p2), scalar_mul(C1, 3, b.p2)));
}

TEST(WCurve, GroupAxiomsOnRandomTriples)
{
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto E = random_family_curve(rng);
        auto P = random_family_point(rng, E);
        auto Q = random_family_point(rng, E);
        auto R = random_family_point(rng, E);
        EXPECT_EQ(add(E, add(E, P, Q), R), add(E, P, add(E, Q, R)));
        EXPECT_EQ(add(E, P, Q), add(E, Q, P));
        EXPECT_EQ(add(E, P, RationalPoint::infinity()), P);
        EXPECT_TRUE(add(E, P, negate(E, P)).is_infinity());
        EXPECT_TRUE(on_curve(E, add(E, P, Q)));
        EXPECT_TRUE(on_curve(E, negate(E, R)));
    }
}

TEST(WCurve, XOfDouble)
{
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        auto E = random_family_curve(rng);
        auto P = random_family_point(rng, E);
        if (P.is_infinity())
            continue;
        auto D = doubled(E, P);
        if (D.is_infinity())
            continue;
        EXPECT_EQ(x_of_double(E, P.x()), D.x());
    }
    auto E = e39();
    EXPECT_EQ(x_of_double(E, Rational(1)), doubled(E, RationalPoint(1, 1)).x());
    EXPECT_EQ(family_x_of_double(Rational(7), Rational(1)), doubled(E, RationalPoint(1, 1)).x());
    // u = 1/2, x = 1/2: the duplication numerator vanishes
    EXPECT_EQ(family_x_of_double(Rational(1, 2), Rational(1, 2)), 0);
}

TEST(WCurve, Invariants)
{
    auto E = e39();
    double j = to_double(E.j_invariant());
    EXPECT_LT(std::fabs(j / -4.72e9 - 1), 0.01);
    EXPECT_EQ(RationalCurve(0, 0, 0, 0, 1).j_invariant(), 0);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Rational u = random_rational(rng, 50, 20);
        try {
            EXPECT_EQ(family_curve(u).j_invariant(), family_j_closed_form(u)) << to_string(u);
        } catch (const SingularCurve&) {
        } catch (const std::domain_error&) {
        }
    }
    // b/c invariants of y^2 + xy = x^3 - x against hand values
    RationalCurve F(1, 0, 0, -1, 0);
    auto inv = F.invariants();
    EXPECT_EQ(inv.b2, 1);
    EXPECT_EQ(inv.b4, -2);
    EXPECT_EQ(inv.b6, 0);
    EXPECT_EQ(inv.b8, -1);
    EXPECT_EQ(inv.c4, 49);
    EXPECT_EQ(inv.discriminant, 1 - 8 * -8); // -b2^2 b8 - 8 b4^3
}

TEST(WCurve, TwoTorsion)
{
    auto cubic7 = family_two_torsion_cubic(Rational(7));
    EXPECT_TRUE(rational_roots(cubic7).roots.empty());
    EXPECT_TRUE(rational_two_torsion(e39()).empty());
    EXPECT_EQ(Rational(1, 4) * two_division_polynomial(e39()), cubic7);
    auto t = rational_two_torsion(c1_curve());
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], RationalPoint(15, 0));
}

TEST(WCurve, ShortFormIsIsomorphic)
{
    auto E = e39();
    auto S = short_form(E);
    EXPECT_EQ(S.curve.j_invariant(), E.j_invariant());
    for (const auto& P : theorem_points_u7())
        EXPECT_TRUE(on_curve(S.curve, S.map(P)));
    auto P = theorem_points_u7()[0], Q = theorem_points_u7()[3];
    EXPECT_EQ(S.map(add(E, P, Q)), add(S.curve, S.map(P), S.map(Q)));
}

TEST(TwoDescent, KnownNonMember)
{
    auto r = is_in_two_E(e39(), RationalPoint(0, 1));
    EXPECT_FALSE(r.in_two_e);
    EXPECT_FALSE(r.truncated);
    EXPECT_THROW(is_in_two_E(e39(), RationalPoint::infinity()), std::domain_error);
}

TEST(TwoDescent, HalvingRoundTrip)
{
    Rng rng(99);
    int done = 0;
    while (done < 100) {
        RationalCurve E = random_family_curve(rng);
        RationalPoint Q = random_family_point(rng, E, 2);
        if (uniform(rng, 0, 1)) {
            auto sc = random_short_curve_with_point(rng);
            E = sc.first;
            Q = scalar_mul(E, uniform(rng, 1, 2), sc.second);
        }
        auto P = doubled(E, Q);
        if (P.is_infinity())
            continue;
        auto r = is_in_two_E(E, P);
        EXPECT_TRUE(r.in_two_e);
        EXPECT_NE(std::find(r.halves.begin(), r.halves.end(), Q), r.halves.end());
        for (const auto& H : r.halves)
            EXPECT_EQ(doubled(E, H), P);
        bool tr = false;
        if (rational_two_torsion(E, &tr).empty() && !tr)
            EXPECT_EQ(r.halves.size(), 1u);
        ++done;
    }
}

TEST(Certificate, TheoremPointsAtSeven)
{
    auto cert = certify_independence(e39(), theorem_points_u7(), std::nullopt, "u=7");
    EXPECT_TRUE(cert.two_torsion_trivial);
    EXPECT_EQ(cert.checks.size(), 15u);
    EXPECT_TRUE(cert.verdict);
    EXPECT_FALSE(cert.inconclusive);
    for (const auto& c : cert.checks)
        EXPECT_FALSE(c.in_two_e);
}

TEST(Certificate, SignedTuplesAgree)
{
    // three-point signed tuples reduce to {0,1}-classes mod 2E
    std::vector<RationalPoint> pts{{0, 1}, {1, 1}, {7, 8}};
    std::vector<std::vector<int>> signed_tuples{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, -1}, {1, 0, 1},
        {1, 1, 1}};
    auto a = certify_independence(e39(), pts, signed_tuples);
    auto b = certify_independence(e39(), pts);
    EXPECT_TRUE(a.verdict);
    EXPECT_EQ(a.verdict, b.verdict);
}

TEST(Certificate, RankFiveCurve)
{
    auto E = family_curve(Rational(237));
    std::vector<RationalPoint> pts{{0, 1}, {1, 1}, {16, 17}, {Rational(-14, 25), Rational(16661, 125)},
        {Rational(52, 81), Rational(469, 729)}};
    for (const auto& P : pts)
        EXPECT_TRUE(on_curve(E, P));
    // the coefficient is forced: (16,17) is on E_t only for t = 237
    EXPECT_FALSE(on_curve(family_curve(Rational(239)), RationalPoint(16, 17)));
    auto cert = certify_independence(E, pts);
    EXPECT_EQ(cert.checks.size(), 31u);
    EXPECT_TRUE(cert.verdict);
}

TEST(Certificate, DependentSetHasWitness)
{
    auto E = e39();
    RationalPoint P(0, 1);
    auto Q = subtract(E, scalar_mul(E, 2, P), scalar_mul(E, 3, P)); // equals -P
    auto cert = certify_independence(E, {P, Q});
    EXPECT_FALSE(cert.verdict);
    ASSERT_TRUE(cert.dependency_witness.has_value());
    EXPECT_EQ(*cert.dependency_witness, (std::vector<int>{1, 1}));
}

TEST(Certificate, NonTrivialTorsionBlocksVerdict)
{
    C1Basis b;
    auto cert = certify_independence(c1_curve(), {b.p1, b.p2});
    EXPECT_FALSE(cert.two_torsion_trivial);
    EXPECT_FALSE(cert.verdict);
}

TEST(Search, MatchesBruteForce)
{
    auto E = e39();
    auto found = search_points(E, 20);
    for (const auto& P : {RationalPoint(0, 1), RationalPoint(1, 1), RationalPoint(7, 8),
             RationalPoint(Rational(1, 9), Rational(8, 27))})
        EXPECT_NE(std::find(found.begin(), found.end(), P), found.end());
    auto F = RationalCurve(0, 0, 0, -2, 1);
    for (long H : {1L, 7L, 30L}) {
        std::vector<RationalPoint> brute;
        for (long q = 1; q <= H; ++q)
            for (long p = -H; p <= H; ++p) {
                if (std::gcd(std::labs(p), q) != 1)
                    continue;
                Rational x = make_rational(p, q);
                Rational rhs = x * x * x - 2 * x + 1;
                auto s = exact_sqrt(rhs);
                if (s) {
                    brute.emplace_back(x, *s);
                    if (!is_zero(*s))
                        brute.emplace_back(x, -*s);
                }
            }
        auto got = search_points(F, H);
        std::sort(brute.begin(), brute.end(), [](const RationalPoint& a, const RationalPoint& b) {
            return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
        });
        std::sort(got.begin(), got.end(), [](const RationalPoint& a, const RationalPoint& b) {
            return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
        });
        EXPECT_EQ(got, brute) << "H=" << H;
    }
}
