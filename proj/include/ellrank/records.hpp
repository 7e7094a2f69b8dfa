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

#ifndef ELLRANK_RECORDS_HPP
#define ELLRANK_RECORDS_HPP

#include "family.hpp"
#include "heights.hpp"
#include "quartic.hpp"
#include "two_descent.hpp"

#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellrank {

enum class RecordReason {
    ok,
    phi_infinity,              // the C1 point maps to a point at infinity of C2
    singular_curve,
    fourth_point_equals_third,
    dependent,                 // some combination is O
    combination_in_two_e,      // certificate fails without a dependency witness
    inconclusive,              // root search truncated
};

inline std::string to_string(RecordReason r)
{
    switch (r) {
        case RecordReason::ok: return "ok";
        case RecordReason::phi_infinity: return "phi_infinity";
        case RecordReason::singular_curve: return "singular_curve";
        case RecordReason::fourth_point_equals_third: return "fourth_point_equals_third";
        case RecordReason::dependent: return "dependent";
        case RecordReason::combination_in_two_e: return "combination_in_two_e";
        case RecordReason::inconclusive: return "inconclusive";
    }
    return "unknown";
}

inline RecordReason parse_reason(const std::string& s)
{
    for (auto r : {RecordReason::ok, RecordReason::phi_infinity, RecordReason::singular_curve,
             RecordReason::fourth_point_equals_third, RecordReason::dependent, RecordReason::combination_in_two_e,
             RecordReason::inconclusive})
        if (to_string(r) == s)
            return r;
    throw std::invalid_argument("unknown record reason: " + s);
}

using Tuple = std::array<long, 3>; // (alpha, beta1, beta2)

struct FamilyOptions
{
    DescentOptions descent;
    HeightOptions heights;
    bool compute_regulator = true;
};

struct FamilyRecord
{
    Tuple tuple{};
    RationalPoint c1_point;
    QuarticPoint c2_point = QuarticPoint::infinity_plus();
    std::optional<Rational> u;
    std::optional<Rational> coefficient; // u^2 - u - 3
    std::vector<RationalPoint> points;
    std::optional<IndependenceCertificate> certificate;
    std::optional<Rational> j;
    std::optional<HeightEstimate> regulator;
    bool verdict = false;
    RecordReason reason = RecordReason::ok;

    bool operator==(const FamilyRecord&) const = default;
};

/// (0,1), (1,1), (u,u+1), (1/9, (9 + 3u - 3u^2 + v)/54) for (u,v) on C2.
inline std::vector<RationalPoint> theorem_points(const Rational& u, const Rational& v)
{
    Rational y4 = (9 + 3 * u - 3 * u * u + v) / 54;
    return {{0, 1}, {1, 1}, {u, u + 1}, {Rational(1, 9), y4}};
}

inline std::string tuple_id(const Tuple& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline FamilyRecord make_family_record(const Tuple& tuple, const FamilyOptions& opts = {})
{
    FamilyRecord rec;
    rec.tuple = tuple;
    rec.c1_point = c1_point(tuple[0], tuple[1], tuple[2]);
    rec.c2_point = phi(rec.c1_point);
    if (!rec.c2_point.is_affine()) {
        rec.reason = RecordReason::phi_infinity;
        return rec;
    }
    const Rational& u = rec.c2_point.u();
    rec.u = u;
    rec.coefficient = quadratic_parameter(u);
    std::optional<RationalCurve> E;
    try {
        E.emplace(quadratic_family_curve(u));
    } catch (const SingularCurve&) {
        rec.reason = RecordReason::singular_curve;
        return rec;
    }
    rec.points = theorem_points(u, rec.c2_point.v());
    for (const auto& P : rec.points)
        if (!on_curve(*E, P))
            throw std::logic_error("theorem point off its curve at u = " + to_string(u));
    rec.j = E->j_invariant();

    if (rec.points[3] == rec.points[2]) {
        rec.reason = RecordReason::fourth_point_equals_third;
    } else {
        rec.certificate = certify_independence(*E, rec.points, std::nullopt, "u=" + to_string(u), opts.descent);
        const auto& c = *rec.certificate;
        if (c.verdict)
            rec.reason = RecordReason::ok;
        else if (c.dependency_witness)
            rec.reason = RecordReason::dependent;
        else if (c.inconclusive)
            rec.reason = RecordReason::inconclusive;
        else
            rec.reason = RecordReason::combination_in_two_e;
    }
    rec.verdict = rec.reason == RecordReason::ok;
    if (opts.compute_regulator)
        rec.regulator = regulator(*E, rec.points, opts.heights);
    return rec;
}

/// Tuples with alpha in {0,1} ordered by max(|beta1|,|beta2|), then
/// alpha, beta1, beta2; tuple (0,0,0) first. Same order as c1_group_sample.
inline std::vector<Tuple> first_tuples(size_t count)
{
    std::vector<Tuple> out;
    for (long box = 0; out.size() < count; ++box)
        for (long alpha = 0; alpha <= 1; ++alpha)
            for (long b1 = -box; b1 <= box; ++b1)
                for (long b2 = -box; b2 <= box; ++b2)
                    if (std::max(std::labs(b1), std::labs(b2)) == box && out.size() < count)
                        out.push_back({alpha, b1, b2});
    return out;
}

} // namespace ellrank

#endif
