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

#ifndef ELLRANK_TWO_DESCENT_HPP
#define ELLRANK_TWO_DESCENT_HPP

#include "roots.hpp"
#include "weierstrass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellrank {

struct DescentOptions
{
    Integer denominator_bound = 1000000;
    unsigned lattice_bits = 8192;
};

/// Rational points of order 2.
inline std::vector<RationalPoint> rational_two_torsion(const RationalCurve& E, bool* truncated = nullptr,
    const DescentOptions& opts = {})
{
    auto roots = rational_roots(two_division_polynomial(E), opts.denominator_bound, opts.lattice_bits);
    if (truncated)
        *truncated = roots.truncated;
    std::vector<RationalPoint> out;
    for (const auto& x : roots.roots) {
        // y is the double root of the y-quadratic
        Rational y = -(E.a1() * x + E.a3()) / 2;
        out.emplace_back(x, y);
    }
    return out;
}

struct HalvingResult
{
    bool in_two_e = false;
    std::vector<RationalPoint> halves; // every Q with 2Q = P
    bool truncated = false;
};

/**
 * Decides P in 2E(Q) by solving x(2Q) = x(P) for rational x(Q), lifting
 * to y(Q) and checking 2Q = P exactly.
 */
inline HalvingResult is_in_two_E(const RationalCurve& E, const RationalPoint& P, const DescentOptions& opts = {})
{
    if (P.is_infinity())
        throw std::domain_error("is_in_two_E: the point at infinity is trivially in 2E");
    auto quartic = duplication_numerator(E) - P.x() * two_division_polynomial(E);
    auto roots = rational_roots(quartic, opts.denominator_bound, opts.lattice_bits);
    HalvingResult out;
    out.truncated = roots.truncated;
    for (const auto& x : roots.roots) {
        for (const auto& Q : lift_x(E, x)) {
            if (doubled(E, Q) == P)
                out.halves.push_back(Q);
        }
    }
    out.in_two_e = !out.halves.empty();
    return out;
}

/// x^3 + (4t + t^2)/4 x^2 - x + 1 with t = u^2 - u - 3: the 2-torsion
/// condition on the quadratic-parameter family, as a cubic in x.
template <class F>
Polynomial<F> family_two_torsion_cubic(const F& u)
{
    F t = u * u - u - F(3);
    F quad = (F(4) * t + t * t) / F(4);
    return Polynomial<F>{F(1), F(-1), quad, F(1)};
}

struct CombinationCheck
{
    std::vector<int> epsilon;
    RationalPoint combination;
    bool in_two_e = false;
    bool truncated = false;

    bool operator==(const CombinationCheck&) const = default;
};

/// Record of the mod-2E argument for Z-independence of a point list.
struct IndependenceCertificate
{
    std::string curve_id;
    std::vector<RationalPoint> points;
    bool two_torsion_trivial = false;
    std::vector<CombinationCheck> checks;
    bool verdict = false;
    bool inconclusive = false;
    std::optional<std::vector<int>> dependency_witness; // combination equal to O

    bool operator==(const IndependenceCertificate&) const = default;
};

/// Nonzero {0,1}-vectors of length k in binary counting order.
inline std::vector<std::vector<int>> all_nonzero_epsilons(size_t k)
{
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        std::vector<int> e(k);
        for (size_t i = 0; i < k; ++i)
            e[i] = static_cast<int>((mask >> i) & 1ul);
        out.push_back(std::move(e));
    }
    return out;
}

/**
 * Trivial rational 2-torsion plus no nonzero combination sum(eps_i P_i) in
 * 2E(Q) implies the P_i are Z-independent. Signed epsilons are accepted;
 * mod 2E they reduce to the same {0,1}-vector classes.
 */
inline IndependenceCertificate certify_independence(const RationalCurve& E, const std::vector<RationalPoint>& points,
    const std::optional<std::vector<std::vector<int>>>& epsilons = std::nullopt, std::string curve_id = {},
    const DescentOptions& opts = {})
{
    IndependenceCertificate cert;
    cert.curve_id = std::move(curve_id);
    cert.points = points;
    for (const auto& P : points) {
        if (P.is_infinity())
            throw std::invalid_argument("certify_independence: point at infinity in input");
        if (!on_curve(E, P))
            throw std::invalid_argument("certify_independence: point not on curve");
    }

    bool torsion_truncated = false;
    cert.two_torsion_trivial = rational_two_torsion(E, &torsion_truncated, opts).empty() && !torsion_truncated;
    bool any_truncated = torsion_truncated;
    bool any_member = !cert.two_torsion_trivial && !torsion_truncated;

    auto eps_list = epsilons ? *epsilons : all_nonzero_epsilons(points.size());
    for (const auto& eps : eps_list) {
        if (eps.size() != points.size())
            throw std::invalid_argument("certify_independence: epsilon length mismatch");
        CombinationCheck check;
        check.epsilon = eps;
        std::vector<long> coeffs(eps.begin(), eps.end());
        check.combination = linear_combination(E, coeffs, points);
        if (check.combination.is_infinity()) {
            check.in_two_e = true;
            if (!cert.dependency_witness)
                cert.dependency_witness = eps;
        } else {
            auto half = is_in_two_E(E, check.combination, opts);
            check.in_two_e = half.in_two_e;
            check.truncated = half.truncated && !half.in_two_e;
        }
        any_member = any_member || check.in_two_e;
        any_truncated = any_truncated || check.truncated;
        cert.checks.push_back(std::move(check));
    }
    cert.verdict = cert.two_torsion_trivial && !any_member && !any_truncated;
    cert.inconclusive = !any_member && any_truncated;
    return cert;
}

} // namespace ellrank

#endif
