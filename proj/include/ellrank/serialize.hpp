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

#ifndef ELLRANK_SERIALIZE_HPP
#define ELLRANK_SERIALIZE_HPP

// JSON and CSV forms of the library's records. Rationals are always exact
// "p/q" strings; fields ending in _decimal are renderings and are ignored
// when parsing.

#include "records.hpp"
#include "report.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace ellrank {

using Json = nlohmann::json;

inline std::string decimal_string(double v, int digits = 10)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline Json to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

inline Json to_json(const RationalPoint& P)
{
    if (P.is_infinity())
        return Json{{"infinity", true}};
    return Json{{"x", to_string(P.x())}, {"y", to_string(P.y())}};
}

inline RationalPoint point_from_json(const Json& j)
{
    if (j.contains("infinity"))
        return RationalPoint::infinity();
    return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

inline Json to_json(const QuarticPoint& P)
{
    switch (P.kind()) {
        case QuarticPointKind::infinity_plus: return Json{{"infinity", "plus"}};
        case QuarticPointKind::infinity_minus: return Json{{"infinity", "minus"}};
        default: return Json{{"u", to_string(P.u())}, {"v", to_string(P.v())}};
    }
}

inline QuarticPoint quartic_point_from_json(const Json& j)
{
    if (j.contains("infinity"))
        return j.at("infinity") == "plus" ? QuarticPoint::infinity_plus() : QuarticPoint::infinity_minus();
    return {rational_from_json(j.at("u")), rational_from_json(j.at("v"))};
}

inline Json to_json(const std::vector<RationalPoint>& pts)
{
    Json a = Json::array();
    for (const auto& P : pts)
        a.push_back(to_json(P));
    return a;
}

inline std::vector<RationalPoint> points_from_json(const Json& j)
{
    std::vector<RationalPoint> out;
    for (const auto& e : j)
        out.push_back(point_from_json(e));
    return out;
}

inline Json to_json(const HeightEstimate& h)
{
    return Json{{"value", h.value}, {"error_bound", h.error_bound}, {"doublings_used", h.doublings_used},
        {"convention", to_string(h.convention)}, {"converged", h.converged}, {"sign_determined", h.sign_determined}};
}

inline HeightEstimate height_from_json(const Json& j)
{
    HeightEstimate h;
    h.value = j.at("value").get<double>();
    h.error_bound = j.at("error_bound").get<double>();
    h.doublings_used = j.at("doublings_used").get<int>();
    h.convention = parse_convention(j.at("convention").get<std::string>());
    h.converged = j.at("converged").get<bool>();
    h.sign_determined = j.at("sign_determined").get<bool>();
    return h;
}

inline Json to_json(const IndependenceCertificate& c)
{
    Json checks = Json::array();
    for (const auto& k : c.checks)
        checks.push_back(Json{{"epsilon", k.epsilon}, {"combination", to_json(k.combination)},
            {"in_two_e", k.in_two_e}, {"truncated", k.truncated}});
    Json witness = c.dependency_witness ? Json(*c.dependency_witness) : Json(nullptr);
    return Json{{"curve_id", c.curve_id}, {"points", to_json(c.points)},
        {"two_torsion_trivial", c.two_torsion_trivial}, {"checks", checks}, {"verdict", c.verdict},
        {"inconclusive", c.inconclusive}, {"dependency_witness", witness}};
}

inline IndependenceCertificate certificate_from_json(const Json& j)
{
    IndependenceCertificate c;
    c.curve_id = j.at("curve_id").get<std::string>();
    c.points = points_from_json(j.at("points"));
    c.two_torsion_trivial = j.at("two_torsion_trivial").get<bool>();
    for (const auto& k : j.at("checks")) {
        CombinationCheck chk;
        chk.epsilon = k.at("epsilon").get<std::vector<int>>();
        chk.combination = point_from_json(k.at("combination"));
        chk.in_two_e = k.at("in_two_e").get<bool>();
        chk.truncated = k.at("truncated").get<bool>();
        c.checks.push_back(std::move(chk));
    }
    c.verdict = j.at("verdict").get<bool>();
    c.inconclusive = j.at("inconclusive").get<bool>();
    if (!j.at("dependency_witness").is_null())
        c.dependency_witness = j.at("dependency_witness").get<std::vector<int>>();
    return c;
}

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f)
{
    return v ? f(*v) : Json(nullptr);
}

inline Json to_json(const FamilyRecord& r)
{
    Json j;
    j["tuple"] = r.tuple;
    j["c1_point"] = to_json(r.c1_point);
    j["c2_point"] = to_json(r.c2_point);
    j["u"] = optional_json(r.u, [](const Rational& v) { return to_json(v); });
    j["coefficient"] = optional_json(r.coefficient, [](const Rational& v) { return to_json(v); });
    j["points"] = to_json(r.points);
    j["j"] = optional_json(r.j, [](const Rational& v) { return to_json(v); });
    j["j_decimal"] = optional_json(r.j, [](const Rational& v) { return Json(decimal_string(to_double(v))); });
    j["regulator"] = optional_json(r.regulator, [](const HeightEstimate& h) { return to_json(h); });
    j["certificate"] = optional_json(r.certificate, [](const IndependenceCertificate& c) { return to_json(c); });
    j["verdict"] = r.verdict;
    j["reason"] = to_string(r.reason);
    return j;
}

inline FamilyRecord record_from_json(const Json& j)
{
    FamilyRecord r;
    r.tuple = j.at("tuple").get<Tuple>();
    r.c1_point = point_from_json(j.at("c1_point"));
    r.c2_point = quartic_point_from_json(j.at("c2_point"));
    if (!j.at("u").is_null())
        r.u = rational_from_json(j.at("u"));
    if (!j.at("coefficient").is_null())
        r.coefficient = rational_from_json(j.at("coefficient"));
    r.points = points_from_json(j.at("points"));
    if (!j.at("j").is_null())
        r.j = rational_from_json(j.at("j"));
    if (!j.at("regulator").is_null())
        r.regulator = height_from_json(j.at("regulator"));
    if (!j.at("certificate").is_null())
        r.certificate = certificate_from_json(j.at("certificate"));
    r.verdict = j.at("verdict").get<bool>();
    r.reason = parse_reason(j.at("reason").get<std::string>());
    return r;
}

inline Json to_json(const IdentityReport& rep)
{
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e{{"name", c.name}, {"holds", c.holds}};
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return Json{{"suite", rep.suite}, {"all_hold", rep.all_hold()}, {"checks", checks}};
}

// --- CSV ---------------------------------------------------------------------

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string record_csv_header()
{
    return "tuple,u,coefficient,j_exact,j_decimal,regulator,regulator_error,verdict,reason";
}

inline std::string to_csv_row(const FamilyRecord& r)
{
    auto opt = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
    std::vector<std::string> f{tuple_id(r.tuple), opt(r.u), opt(r.coefficient), opt(r.j),
        r.j ? decimal_string(to_double(*r.j)) : std::string(),
        r.regulator ? decimal_string(r.regulator->value) : std::string(),
        r.regulator ? decimal_string(r.regulator->error_bound, 3) : std::string(), r.verdict ? "true" : "false",
        to_string(r.reason)};
    std::string line;
    for (size_t i = 0; i < f.size(); ++i)
        line += (i ? "," : "") + csv_field(f[i]);
    return line;
}

} // namespace ellrank

#endif
