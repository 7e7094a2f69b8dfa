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
using P = RationalPolynomial;

namespace {

bool contains(const std::vector<QuarticPoint>& v, const QuarticPoint& p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

std::vector<std::pair<Rational, Rational>> brute_force(const QuarticCurve& C, long H)
{
    std::vector<std::pair<Rational, Rational>> out;
    for (long q = 1; q <= H; ++q)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(std::labs(p), q) != 1)
                continue;
            Rational u = make_rational(p, q);
            if (auto v = exact_sqrt(C.polynomial().evaluate(u))) {
                out.emplace_back(u, *v);
                if (!is_zero(*v))
                    out.emplace_back(u, -*v);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Quartic, Construction)
{
    EXPECT_THROW(QuarticCurve(P{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(QuarticCurve(P{1, 0, 2, 0, 1}), std::invalid_argument); // (u^2+1)^2
    auto C2 = c2_curve();
    EXPECT_EQ(C2.leading_root(), Rational(3));
    EXPECT_FALSE(QuarticCurve(P{1, 0, 0, 0, 2}).leading_root().has_value());
}

TEST(Quartic, OnCurveExamples)
{
    auto C2 = c2_curve();
    EXPECT_TRUE(quartic_on_curve(C2, {7, 133}));
    EXPECT_TRUE(quartic_on_curve(C2, {Rational(1, 9), Rational(1369, 27)}));
    EXPECT_TRUE(quartic_on_curve(C2, {-6, -133}));
    EXPECT_FALSE(quartic_on_curve(C2, {7, 132}));
    EXPECT_TRUE(quartic_on_curve(C2, QuarticPoint::infinity_plus()));
    EXPECT_FALSE(quartic_on_curve(QuarticCurve(P{1, 0, 0, 0, 2}), QuarticPoint::infinity_minus()));
}

TEST(Quartic, ExceptionalValues)
{
    EXPECT_EQ(phi(RationalPoint::infinity()), QuarticPoint(7, 133));
    EXPECT_EQ(phi({-45, -2340}), QuarticPoint(Rational(-10898, 5187), Rational(-477412081, 8968323)));
    EXPECT_EQ(phi({1551, -59904}), QuarticPoint(Rational(16085, 5187), Rational(477412081, 8968323)));
    EXPECT_EQ(phi({-45, 2340}), QuarticPoint::infinity_minus());
    EXPECT_EQ(phi({1551, 59904}), QuarticPoint::infinity_plus());
    EXPECT_TRUE(psi({7, 133}).is_infinity());
    EXPECT_EQ(psi({7, -133}), RationalPoint(Rational(-3628425, 17689), Rational(8081948160, 2352637)));
    EXPECT_THROW(psi(QuarticPoint::infinity_plus()), std::domain_error);
    EXPECT_THROW(phi({1, 1}), std::invalid_argument);
    // the branch choices agree with the curve's limiting slopes
    EXPECT_EQ(infinity_branch_sign_near(-45), -1);
    EXPECT_EQ(infinity_branch_sign_near(1551), 1);
}

TEST(Quartic, YValueAmbiguityResolvedOnCurve)
{
    auto C1 = c1_curve();
    EXPECT_TRUE(on_curve(C1, RationalPoint(1551, -59904)));
    EXPECT_FALSE(on_curve(C1, RationalPoint(1551, -5990)));
}

TEST(Quartic, GeneratorSets)
{
    auto C1 = c1_curve();
    C1Basis b;
    EXPECT_TRUE(on_curve(C1, b.torsion));
    EXPECT_TRUE(on_curve(C1, b.p1));
    EXPECT_TRUE(on_curve(C1, b.p2));
    for (const auto& P : c1_alternative_generators())
        EXPECT_TRUE(on_curve(C1, P));
}

TEST(Quartic, RoundTrips)
{
    auto sample = c1_group_sample(60);
    EXPECT_EQ(sample.size(), 60u);
    auto C2 = c2_curve();
    auto C1 = c1_curve();
    int in_a = 0;
    for (const auto& P : sample) {
        auto Q = phi(P);
        EXPECT_TRUE(quartic_on_curve(C2, Q));
        if (in_phi_domain_A(P)) {
            ++in_a;
            EXPECT_EQ(psi(Q), P);
            EXPECT_TRUE(on_curve(C1, psi(Q)));
        }
    }
    EXPECT_GE(in_a, 50);
    auto rep = roundtrip_check(sample);
    for (const auto& c : rep.checks)
        EXPECT_TRUE(c.holds) << c.name;
    // torsion round trip
    EXPECT_EQ(psi(phi(RationalPoint(15, 0))), RationalPoint(15, 0));
}

TEST(Quartic, PsiOfKnownPoint)
{
    auto P = psi({Rational(1, 9), Rational(1369, 27)});
    EXPECT_TRUE(on_curve(c1_curve(), P));
    EXPECT_EQ(phi(P), QuarticPoint(Rational(1, 9), Rational(1369, 27)));
}

TEST(Quartic, SearchExamples)
{
    auto C2 = c2_curve();
    auto found = search_points(C2, 10);
    EXPECT_TRUE(contains(found, {7, 133}));
    EXPECT_TRUE(contains(found, {-6, 133}));
    EXPECT_TRUE(contains(found, {-6, -133}));
    EXPECT_TRUE(search_points(C2, 1).empty());
    auto toy = search_points(QuarticCurve(P{1, 0, 0, 0, 1}), 2);
    EXPECT_TRUE(contains(toy, {0, 1}));
    EXPECT_TRUE(contains(toy, {0, -1}));
    // v^2 = -(u^4 + 1) has no real points at all
    EXPECT_TRUE(search_points(QuarticCurve(P{-1, 0, 0, 0, -1}), 30).empty());
    EXPECT_THROW(search_points(C2, 0), std::invalid_argument);
}

TEST(Quartic, SearchMatchesBruteForce)
{
    std::vector<QuarticCurve> curves{c2_curve(), QuarticCurve(P{1, 0, 0, 0, 1}),
        QuarticCurve(P{Rational(1, 4), -1, Rational(3, 2), 2, 1}), QuarticCurve(P{4, -2, 1, 2, -1})};
    for (const auto& C : curves)
        for (long H : {3L, 12L, 30L}) {
            std::vector<std::pair<Rational, Rational>> got;
            for (const auto& q : search_points(C, H))
                got.emplace_back(q.u(), q.v());
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, brute_force(C, H)) << "H=" << H;
        }
}

TEST(Quartic, HyperellipticGenus)
{
    EXPECT_EQ(hyperelliptic_genus(two_torsion_quintic()), 2);
    EXPECT_EQ(hyperelliptic_genus(c2_quartic()), 1);
    EXPECT_EQ(hyperelliptic_genus(P{1, 0, 0, 1}), 1);
    EXPECT_THROW(hyperelliptic_genus(P{0, 0, 1}), std::invalid_argument);
    // shift invariance
    for (long c : {-3L, 1L, 5L}) {
        auto shifted = two_torsion_quintic().compose(P{Rational(c), 1});
        EXPECT_EQ(hyperelliptic_genus(shifted), 2);
        EXPECT_EQ(hyperelliptic_genus(c2_quartic().compose(P{Rational(c), 1})), 1);
    }
}

TEST(Quartic, HyperellipticTransform)
{
    auto rep = hyperelliptic_transform_check();
    for (const auto& c : rep.checks)
        EXPECT_TRUE(c.holds) << c.name;
}
