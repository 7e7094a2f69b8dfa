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

#include "ellrank/cache.hpp"
#include "ellrank/ellrank.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

using namespace ellrank;

namespace {

enum Exit { exit_ok = 0, exit_failure = 1, exit_inconclusive = 2, exit_usage = 3 };

struct Globals
{
    double tolerance = 1e-4;
    long height_bound = 30;
    std::string denominator_bound = "1000000";
    int doubling_cap = 9;
    std::string convention = "auto";
    std::string cache_dir;
    std::string out = "json";
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

HeightConvention resolve_convention(const Globals& g)
{
    return g.convention == "auto" ? default_convention : parse_convention(g.convention);
}

FamilyOptions family_options(const Globals& g, bool with_regulator)
{
    FamilyOptions o;
    o.descent.denominator_bound = Integer(g.denominator_bound);
    o.heights.tolerance = g.tolerance;
    o.heights.doubling_cap = g.doubling_cap;
    o.heights.convention = resolve_convention(g);
    o.compute_regulator = with_regulator;
    return o;
}

std::string exact_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string options_key(const FamilyOptions& o)
{
    std::ostringstream s;
    s << "den=" << o.descent.denominator_bound.get_str() << "|lattice=" << o.descent.lattice_bits;
    if (o.compute_regulator)
        s << "|tol=" << exact_double(o.heights.tolerance) << "|cap=" << o.heights.doubling_cap
          << "|conv=" << to_string(o.heights.convention);
    else
        s << "|no-regulator";
    return s.str();
}

/// f(0..n-1) on up to `jobs` threads; results come back in index order.
template <class T, class F>
std::vector<T> parallel_map(size_t n, unsigned jobs, F f)
{
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < n;) {
            try {
                slots[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned k = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < k; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    std::vector<T> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

FamilyRecord cached_record(const Tuple& t, const FamilyOptions& o, const ResultCache& cache)
{
    std::string key = "family-record/1|tuple=" + tuple_id(t) + "|" + options_key(o);
    if (auto hit = cache.get(key))
        return record_from_json(*hit);
    auto rec = make_family_record(t, o);
    cache.put(key, to_json(rec));
    return rec;
}

std::pair<long, long> parse_range(const std::string& s)
{
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long lo = std::stol(s.substr(0, colon));
        long hi = std::stol(s.substr(colon + 1));
        if (lo > hi)
            throw UsageError("empty range " + s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("malformed range '" + s + "' (expected N or LO:HI)");
    }
}

std::vector<Rational> parse_rational_list(const std::string& s, size_t expected)
{
    std::vector<Rational> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw UsageError("not a rational: '" + item + "'");
        }
    }
    if (out.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " comma-separated rationals in '" + s + "'");
    return out;
}

Json metadata(const Globals& g, const std::string& command)
{
    return Json{{"command", command}, {"convention", to_string(resolve_convention(g))},
        {"convention_source", g.convention == "auto" ? "auto: matches R(7) = 8.61" : "flag"},
        {"tolerance", g.tolerance}, {"doubling_cap", g.doubling_cap}, {"denominator_bound", g.denominator_bound}};
}

// --- verify-theorem ----------------------------------------------------------

bool documented_degenerate(const FamilyRecord& r)
{
    switch (r.reason) {
        case RecordReason::phi_infinity:
        case RecordReason::singular_curve:
        case RecordReason::fourth_point_equals_third: return true;
        case RecordReason::dependent:
        case RecordReason::combination_in_two_e: return r.u && (*r.u == Rational(1, 9) || *r.u == Rational(8, 9));
        default: return false;
    }
}

int cmd_verify_theorem(const Globals& g, size_t count, bool with_regulator, const ResultCache& cache)
{
    IdentityReport rep{"verify-theorem", {}};
    auto C1 = c1_curve();
    C1Basis b;
    rep.add("(15,0) on C1", on_curve(C1, b.torsion));
    rep.add("2(15,0) = O", doubled(C1, b.torsion).is_infinity());
    rep.add("(-309,756), (-45,2340) on C1", on_curve(C1, b.p1) && on_curve(C1, b.p2));
    auto alt = c1_alternative_generators();
    rep.add("(-309,-756), (390,-4950) on C1", on_curve(C1, alt[0]) && on_curve(C1, alt[1]));
    HeightOptions ho;
    ho.tolerance = g.tolerance;
    ho.doubling_cap = g.doubling_cap;
    ho.convention = resolve_convention(g);
    for (const auto& [name, pair] : {std::pair{std::string("theorem pair"), std::vector{b.p1, b.p2}},
             std::pair{std::string("alternative pair"), alt}}) {
        auto R = regulator(C1, pair, ho);
        rep.add(name + " height determinant > 0", R.sign_determined && R.value > 0,
            decimal_string(R.value) + " +- " + decimal_string(R.error_bound, 3));
    }
    rep.append(roundtrip_check(c1_group_sample(50)));

    auto opts = family_options(g, with_regulator);
    auto tuples = first_tuples(count);
    auto records = parallel_map<FamilyRecord>(tuples.size(), g.jobs,
        [&](size_t i) { return cached_record(tuples[i], opts, cache); });
    bool inconclusive = false;
    for (const auto& r : records) {
        bool ok = r.verdict || documented_degenerate(r);
        inconclusive = inconclusive || r.reason == RecordReason::inconclusive;
        std::string name = "record " + tuple_id(r.tuple);
        if (r.u)
            name += " u=" + to_short_string(*r.u);
        rep.add(name + ": " + to_string(r.reason), ok || r.reason == RecordReason::inconclusive);
    }
    bool pass = rep.all_hold();
    std::string status = !pass ? "fail" : inconclusive ? "inconclusive" : "pass";

    if (g.out == "csv") {
        std::cout << record_csv_header() << "\n";
        for (const auto& r : records)
            std::cout << to_csv_row(r) << "\n";
    } else {
        Json doc = metadata(g, "verify-theorem");
        doc["checks"] = to_json(rep)["checks"];
        Json arr = Json::array();
        for (const auto& r : records)
            arr.push_back(to_json(r));
        doc["records"] = arr;
        doc["status"] = status;
        std::cout << doc.dump(2) << "\n";
    }
    return !pass ? exit_failure : inconclusive ? exit_inconclusive : exit_ok;
}

// --- family ------------------------------------------------------------------

int cmd_family(const Globals& g, const std::string& alpha, const std::string& beta1, const std::string& beta2,
    bool with_regulator, bool keep_duplicates, const ResultCache& cache)
{
    auto ar = parse_range(alpha);
    if (ar.first < 0 || ar.second > 1)
        throw UsageError("alpha must lie in {0,1}");
    auto b1 = parse_range(beta1);
    auto b2 = parse_range(beta2);
    std::vector<Tuple> tuples;
    for (long a = ar.first; a <= ar.second; ++a)
        for (long x = b1.first; x <= b1.second; ++x)
            for (long y = b2.first; y <= b2.second; ++y)
                tuples.push_back({a, x, y});
    auto opts = family_options(g, with_regulator);
    auto records = parallel_map<FamilyRecord>(tuples.size(), g.jobs,
        [&](size_t i) { return cached_record(tuples[i], opts, cache); });

    std::set<Rational> seen_j;
    bool inconclusive = false;
    if (g.out == "csv")
        std::cout << record_csv_header() << "\n";
    for (const auto& r : records) {
        if (r.j && !keep_duplicates && !seen_j.insert(*r.j).second)
            continue;
        inconclusive = inconclusive || r.reason == RecordReason::inconclusive;
        if (g.out == "csv")
            std::cout << to_csv_row(r) << "\n";
        else
            std::cout << to_json(r).dump() << "\n";
    }
    return inconclusive ? exit_inconclusive : exit_ok;
}

// --- identities --------------------------------------------------------------

int cmd_identities(const Globals& g)
{
    std::vector<IdentityReport> suites{linear_parameter_identities(), quadratic_parameter_identities(),
        verify_family_identities(), discriminant_identities(), verify_x19_quadratic(), case1_substitution_check(),
        duplication_identities(), j_identity(), hyperelliptic_transform_check(), roundtrip_check(c1_group_sample(50))};
    bool all = true;
    for (const auto& s : suites)
        all = all && s.all_hold();
    if (g.out == "csv") {
        std::cout << "suite,check,holds\n";
        for (const auto& s : suites)
            for (const auto& c : s.checks)
                std::cout << csv_field(s.suite) << "," << csv_field(c.name) << "," << (c.holds ? "true" : "false")
                          << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& s : suites)
            arr.push_back(to_json(s));
        std::cout << Json{{"command", "identities"}, {"suites", arr}, {"all_hold", all}}.dump(2) << "\n";
    }
    return all ? exit_ok : exit_failure;
}

// --- search ------------------------------------------------------------------

int cmd_search(const Globals& g, const std::string& spec)
{
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    Json pts = Json::array();
    std::vector<std::pair<std::string, std::string>> rows; // csv
    auto weierstrass = [&](const RationalCurve& E) {
        for (const auto& P : search_points(E, g.height_bound)) {
            pts.push_back(to_json(P));
            rows.emplace_back(to_string(P.x()), to_string(P.y()));
        }
    };
    auto quartic = [&](const QuarticCurve& C) {
        for (const auto& P : search_points(C, g.height_bound)) {
            pts.push_back(to_json(P));
            rows.emplace_back(to_string(P.u()), to_string(P.v()));
        }
    };
    try {
        if (kind == "c1") {
            weierstrass(c1_curve());
        } else if (kind == "c2") {
            quartic(c2_curve());
        } else if (kind == "family") {
            weierstrass(family_curve(parse_rational_list(args, 1)[0]));
        } else if (kind == "weierstrass") {
            auto a = parse_rational_list(args, 5);
            weierstrass(RationalCurve(a[0], a[1], a[2], a[3], a[4]));
        } else if (kind == "quartic") {
            quartic(QuarticCurve(RationalPolynomial(parse_rational_list(args, 5))));
        } else {
            throw UsageError("unknown curve kind '" + kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed curve spec: ") + e.what());
    } catch (const SingularCurve& e) {
        throw UsageError(std::string("malformed curve spec: ") + e.what());
    }
    if (g.out == "csv") {
        std::cout << (kind == "c2" || kind == "quartic" ? "u,v" : "x,y") << "\n";
        for (const auto& [a, b] : rows)
            std::cout << a << "," << b << "\n";
    } else {
        std::cout << Json{{"command", "search"}, {"curve", spec}, {"height_bound", g.height_bound}, {"points", pts}}
                         .dump(2)
                  << "\n";
    }
    return exit_ok;
}

// --- stats -------------------------------------------------------------------

struct StatsRow
{
    long t = 0;
    int lower_bound = 0;
    size_t candidates = 0;
    std::vector<RationalPoint> basis;
    std::string note;
    bool inconclusive = false;
};

Json to_json(const StatsRow& r)
{
    return Json{{"t", r.t}, {"lower_bound", r.lower_bound}, {"candidates", r.candidates},
        {"basis", ellrank::to_json(r.basis)}, {"note", r.note}, {"inconclusive", r.inconclusive}};
}

StatsRow stats_from_json(const Json& j)
{
    StatsRow r;
    r.t = j.at("t").get<long>();
    r.lower_bound = j.at("lower_bound").get<int>();
    r.candidates = j.at("candidates").get<size_t>();
    r.basis = points_from_json(j.at("basis"));
    r.note = j.at("note").get<std::string>();
    r.inconclusive = j.at("inconclusive").get<bool>();
    return r;
}

/// Greedy: keep a candidate when the enlarged list still has a certificate.
StatsRow stats_row(long t, const Globals& g, const std::vector<RationalPoint>& hints, int max_rank)
{
    StatsRow row;
    row.t = t;
    std::optional<RationalCurve> E;
    try {
        E.emplace(family_curve(Rational(t)));
    } catch (const SingularCurve&) {
        row.note = "singular";
        return row;
    }
    DescentOptions d;
    d.denominator_bound = Integer(g.denominator_bound);
    bool truncated = false;
    if (!rational_two_torsion(*E, &truncated, d).empty()) {
        row.note = "nontrivial rational 2-torsion";
        return row;
    }
    std::vector<RationalPoint> candidates;
    for (const auto& P : hints)
        if (on_curve(*E, P))
            candidates.push_back(P);
    for (const auto& P : search_points(*E, g.height_bound))
        candidates.push_back(P);
    row.candidates = candidates.size();
    std::set<Rational> tried_x;
    for (const auto& P : candidates) {
        if (static_cast<int>(row.basis.size()) >= max_rank)
            break;
        if (!tried_x.insert(P.x()).second)
            continue; // -P gives the same class mod 2E
        auto pts = row.basis;
        pts.push_back(P);
        std::vector<std::vector<int>> eps;
        for (auto e : all_nonzero_epsilons(pts.size()))
            if (e.back() == 1)
                eps.push_back(e);
        auto cert = certify_independence(*E, pts, eps, "t=" + std::to_string(t), d);
        if (cert.verdict)
            row.basis.push_back(P);
        row.inconclusive = row.inconclusive || cert.inconclusive;
    }
    row.lower_bound = static_cast<int>(row.basis.size());
    if (row.inconclusive)
        row.note = "some candidates inconclusive";
    return row;
}

int cmd_stats(const Globals& g, const std::string& t_range, const std::vector<std::string>& hint_specs, int max_rank,
    bool histogram, const ResultCache& cache)
{
    auto [lo, hi] = parse_range(t_range);
    std::vector<RationalPoint> hints;
    std::string hint_key;
    for (const auto& h : hint_specs) {
        auto xy = parse_rational_list(h, 2);
        hints.emplace_back(xy[0], xy[1]);
        hint_key += "(" + to_string(xy[0]) + "," + to_string(xy[1]) + ")";
    }
    size_t n = static_cast<size_t>(hi - lo + 1);
    auto rows = parallel_map<StatsRow>(n, g.jobs, [&](size_t i) {
        long t = lo + static_cast<long>(i);
        std::string key = "stats-row/1|t=" + std::to_string(t) + "|H=" + std::to_string(g.height_bound)
            + "|den=" + g.denominator_bound + "|max=" + std::to_string(max_rank) + "|hints=" + hint_key;
        if (auto hit = cache.get(key))
            return stats_from_json(*hit);
        auto row = stats_row(t, g, hints, max_rank);
        cache.put(key, to_json(row));
        return row;
    });
    bool inconclusive = false;
    for (const auto& r : rows)
        inconclusive = inconclusive || r.inconclusive;
    if (histogram) {
        std::map<int, int> counts;
        for (const auto& r : rows)
            if (r.note != "singular")
                ++counts[r.lower_bound];
        std::cout << "lower_bound,count\n";
        for (const auto& [k, c] : counts)
            std::cout << k << "," << c << "\n";
    } else if (g.out == "csv") {
        std::cout << "t,lower_bound,candidates,note\n";
        for (const auto& r : rows)
            std::cout << r.t << "," << r.lower_bound << "," << r.candidates << "," << csv_field(r.note) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << to_json(r).dump() << "\n";
    }
    return inconclusive ? exit_inconclusive : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct and certify rank >= 4 members of y^2 + t x y = x^3 + t x^2 - x + 1"};
    app.set_config("--config", "", "key=value configuration file; flags override it");
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--tolerance", g.tolerance, "canonical height tolerance")->capture_default_str();
    app.add_option("--height-bound", g.height_bound, "point search bound on |numerator|, denominator")
        ->capture_default_str();
    app.add_option("--denominator-bound", g.denominator_bound, "rational root reconstruction bound")
        ->capture_default_str();
    app.add_option("--doubling-cap", g.doubling_cap, "maximum doublings per canonical height")->capture_default_str();
    app.add_option("--convention", g.convention, "height normalization")
        ->check(CLI::IsMember({"auto", "full", "half"}))
        ->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "directory for the result cache (disabled when empty)");
    app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads; output order does not depend on it")->capture_default_str();

    auto* verify = app.add_subcommand("verify-theorem", "check C1, the maps and the first family records");
    size_t count = 12;
    bool verify_regulator = false;
    verify->add_option("--count", count, "number of C1 points to turn into records")->capture_default_str();
    verify->add_flag("--regulator", verify_regulator, "also compute each record's regulator");

    auto* family = app.add_subcommand("family", "records for alpha T + beta1 P1 + beta2 P2 on C1");
    std::string alpha = "0:1", beta1 = "-1:1", beta2 = "-1:1";
    bool no_regulator = false, keep_duplicates = false;
    family->add_option("--alpha", alpha, "N or LO:HI within {0,1}")->capture_default_str();
    family->add_option("--beta1", beta1, "N or LO:HI")->capture_default_str();
    family->add_option("--beta2", beta2, "N or LO:HI")->capture_default_str();
    family->add_flag("--no-regulator", no_regulator, "skip regulators");
    family->add_flag("--keep-duplicates", keep_duplicates, "do not drop records with an already seen j");

    auto* identities = app.add_subcommand("identities", "run every symbolic identity suite");

    auto* search = app.add_subcommand("search", "bounded-height rational point search");
    std::string curve_spec;
    search
        ->add_option("curve", curve_spec,
            "c1 | c2 | family:T | weierstrass:a1,a2,a3,a4,a6 | quartic:q0,q1,q2,q3,q4")
        ->required();

    auto* stats = app.add_subcommand("stats", "rank lower bounds over a range of integer t");
    std::string t_range = "1:20";
    std::vector<std::string> hints;
    int max_rank = 8;
    bool histogram = false;
    stats->add_option("--t", t_range, "N or LO:HI")->capture_default_str();
    stats->add_option("--hint", hints, "x,y point tried before the search results (repeatable)");
    stats->add_option("--max-rank", max_rank, "stop after this many independent points")->capture_default_str();
    stats->add_flag("--histogram", histogram, "emit lower_bound,count instead of one row per t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        ResultCache cache = g.cache_dir.empty() ? ResultCache() : ResultCache(g.cache_dir);
        if (*verify)
            return cmd_verify_theorem(g, count, verify_regulator, cache);
        if (*family)
            return cmd_family(g, alpha, beta1, beta2, !no_regulator, keep_duplicates, cache);
        if (*identities)
            return cmd_identities(g);
        if (*search)
            return cmd_search(g, curve_spec);
        if (*stats)
            return cmd_stats(g, t_range, hints, max_rank, histogram, cache);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
