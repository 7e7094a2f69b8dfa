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

#ifndef ELLRANK_QUARTIC_HPP
#define ELLRANK_QUARTIC_HPP

#include "rational_function.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <numeric>
#include <tuple>
#include <vector>

namespace ellrank {

/// v^2 = q(u) with deg q = 4 and q squarefree.
class QuarticCurve
{
    public:
        explicit QuarticCurve(RationalPolynomial q) : _q(std::move(q))
        {
            if (_q.degree() != 4)
                throw std::invalid_argument("quartic model needs a degree-4 polynomial");
            if (!is_squarefree(_q))
                throw std::invalid_argument("quartic model polynomial is not squarefree");
        }

        const RationalPolynomial& polynomial() const { return _q; }
        Rational coefficient(int k) const { return _q.coefficient(k); }

        /// sqrt(q4) when the two points at infinity are rational.
        std::optional<Rational> leading_root() const { return exact_sqrt(_q.leading()); }

    private:
        RationalPolynomial _q;
};

enum class QuarticPointKind { affine, infinity_plus, infinity_minus };

/// Affine (u, v), or one of the two branches at infinity where
/// v ~ +sqrt(q4) u^2 (plus) or v ~ -sqrt(q4) u^2 (minus).
class QuarticPoint
{
    public:
        QuarticPoint(Rational u, Rational v) : _kind(QuarticPointKind::affine), _u(std::move(u)), _v(std::move(v)) {}

        static QuarticPoint infinity_plus() { return QuarticPoint(QuarticPointKind::infinity_plus); }
        static QuarticPoint infinity_minus() { return QuarticPoint(QuarticPointKind::infinity_minus); }

        QuarticPointKind kind() const { return _kind; }
        bool is_affine() const { return _kind == QuarticPointKind::affine; }

        const Rational& u() const
        {
            if (!is_affine())
                throw std::domain_error("point at infinity has no u-coordinate");
            return _u;
        }
        const Rational& v() const
        {
            if (!is_affine())
                throw std::domain_error("point at infinity has no v-coordinate");
            return _v;
        }

        friend bool operator==(const QuarticPoint& a, const QuarticPoint& b)
        {
            if (a._kind != b._kind)
                return false;
            return !a.is_affine() || (a._u == b._u && a._v == b._v);
        }
        friend bool operator!=(const QuarticPoint& a, const QuarticPoint& b) { return !(a == b); }

    private:
        explicit QuarticPoint(QuarticPointKind k) : _kind(k) {}

        QuarticPointKind _kind;
        Rational _u{0};
        Rational _v{0};
};

inline std::ostream& operator<<(std::ostream& os, const QuarticPoint& P)
{
    switch (P.kind()) {
        case QuarticPointKind::infinity_plus: return os << "inf+";
        case QuarticPointKind::infinity_minus: return os << "inf-";
        default: return os << "(" << P.u().get_str() << ", " << P.v().get_str() << ")";
    }
}

inline bool quartic_on_curve(const QuarticCurve& C, const QuarticPoint& P)
{
    if (!P.is_affine()) {
        auto r = C.leading_root();
        return r.has_value() && !is_zero(*r);
    }
    return P.v() * P.v() == C.polynomial().evaluate(P.u());
}

// --- the concrete curves ---------------------------------------------------

/// C1: y0^2 = x0^3 - 92835 x0 + 1389150.
inline RationalCurve c1_curve() { return RationalCurve(0, 0, 0, -92835, 1389150); }

/// C2: v^2 = 2569 + 18u - 9u^2 - 18u^3 + 9u^4.
inline QuarticCurve c2_curve() { return QuarticCurve(RationalPolynomial{2569, 18, -9, -18, 9}); }

struct C1Basis
{
    RationalPoint torsion{15, 0};
    RationalPoint p1{-309, 756};
    RationalPoint p2{-45, 2340};
};

/// The generators listed alongside the Weierstrass model of C2.
inline std::vector<RationalPoint> c1_alternative_generators() { return {{-309, -756}, {390, -4950}}; }

/// alpha T + beta1 P1 + beta2 P2 on C1.
inline RationalPoint c1_point(long alpha, long beta1, long beta2)
{
    C1Basis b;
    return linear_combination(c1_curve(), {alpha, beta1, beta2}, {b.torsion, b.p1, b.p2});
}

/**
 * phi: C1 -> C2. Regular everywhere; the four points with x0 in {-45, 1551}
 * and the point at infinity take their values from limits along C1.
 */
inline QuarticPoint phi(const RationalPoint& P)
{
    static const RationalCurve C1 = c1_curve();
    if (!on_curve(C1, P))
        throw std::invalid_argument("phi: point is not on C1");
    if (P.is_infinity())
        return {7, 133};
    const Rational& x = P.x();
    const Rational& y = P.y();
    if (x == -45) {
        if (y == 2340)
            return QuarticPoint::infinity_minus();
        return {Rational(-10898, 5187), Rational(-477412081, 8968323)};
    }
    if (x == 1551) {
        if (y == 59904)
            return QuarticPoint::infinity_plus();
        return {Rational(16085, 5187), Rational(477412081, 8968323)};
    }
    Rational d1 = x - 1551;
    Rational d2 = x + 45;
    Rational u = (565605 + x * (-948 + 7 * x) + 266 * y) / (d1 * d2);
    Rational vn = 133 * (92385 + (x - 30) * x) * (-115425 + x * (1536 + x)) + 234 * (-3922935 + x * (9010 + 41 * x)) * y;
    Rational v = vn / (d1 * d1 * d2 * d2);
    return {u, v};
}

/// psi: C2 -> C1, inverse of phi away from the points at infinity of C2.
inline RationalPoint psi(const QuarticPoint& Q)
{
    static const QuarticCurve C2 = c2_curve();
    if (!Q.is_affine())
        throw std::domain_error("psi is not regular at the points at infinity of C2");
    if (!quartic_on_curve(C2, Q))
        throw std::invalid_argument("psi: point is not on C2");
    const Rational& u = Q.u();
    const Rational& v = Q.v();
    if (u == 7) {
        if (v == 133)
            return RationalPoint::infinity();
        return {Rational(-3628425, 17689), Rational(8081948160, 2352637)};
    }
    Rational d = u - 7;
    Rational x = (5117 - 948 * u + 753 * u * u + 266 * v) / (d * d);
    Rational y = (266 * (5201 + 9 * u * (-4 + u * (-22 + 13 * u))) + 2 * (1799 + 4797 * u) * v) / (d * d * d);
    return {x, y};
}

/// Points of C1 from the Theorem basis, ordered by max |coefficient|.
inline std::vector<RationalPoint> c1_group_sample(size_t count)
{
    std::vector<RationalPoint> out;
    auto seen = [&](const RationalPoint& P) { return std::find(out.begin(), out.end(), P) != out.end(); };
    for (long box = 0; out.size() < count; ++box) {
        for (long alpha = 0; alpha <= 1; ++alpha)
            for (long b1 = -box; b1 <= box; ++b1)
                for (long b2 = -box; b2 <= box; ++b2) {
                    if (std::max(std::labs(b1), std::labs(b2)) != box || out.size() >= count)
                        continue;
                    auto P = c1_point(alpha, b1, b2);
                    if (!seen(P))
                        out.push_back(P);
                }
    }
    return out;
}

inline bool in_phi_domain_A(const RationalPoint& P)
{
    return P != RationalPoint(-45, 2340) && P != RationalPoint(1551, 59904);
}

/// psi(phi(P)) = P on A and phi(psi(Q)) = Q on B, plus the exceptional table.
inline IdentityReport roundtrip_check(const std::vector<RationalPoint>& c1_sample)
{
    IdentityReport report{"phi/psi round trips", {}};
    const auto C1 = c1_curve();
    const auto C2 = c2_curve();
    size_t a_ok = 0, a_total = 0, b_ok = 0, b_total = 0;
    for (const auto& P : c1_sample) {
        auto Q = phi(P);
        if (!quartic_on_curve(C2, Q)) {
            report.add("phi output on C2", false);
            continue;
        }
        if (in_phi_domain_A(P)) {
            ++a_total;
            a_ok += on_curve(C1, psi(Q)) && psi(Q) == P;
        }
        if (Q.is_affine()) {
            ++b_total;
            b_ok += phi(psi(Q)) == Q;
        }
    }
    report.add("psi(phi(P)) = P on " + std::to_string(a_total) + " points of A", a_ok == a_total && a_total > 0);
    report.add("phi(psi(Q)) = Q on " + std::to_string(b_total) + " points of B", b_ok == b_total && b_total > 0);

    report.add("phi(-45, 2340) = inf- (v/u^2 -> -3)", phi(RationalPoint(-45, 2340)) == QuarticPoint::infinity_minus());
    report.add("phi(-45,-2340) = (-10898/5187, -477412081/8968323)",
        phi(RationalPoint(-45, -2340)) == QuarticPoint(Rational(-10898, 5187), Rational(-477412081, 8968323)));
    report.add("phi(1551, 59904) = inf+ (v/u^2 -> +3)", phi(RationalPoint(1551, 59904)) == QuarticPoint::infinity_plus());
    report.add("phi(1551,-59904) = (16085/5187, 477412081/8968323)",
        phi(RationalPoint(1551, -59904)) == QuarticPoint(Rational(16085, 5187), Rational(477412081, 8968323)));
    report.add("phi(O) = (7, 133)", phi(RationalPoint::infinity()) == QuarticPoint(7, 133));
    report.add("psi(7, 133) = O", psi(QuarticPoint(7, 133)).is_infinity());
    RationalPoint special(Rational(-3628425, 17689), Rational(8081948160, 2352637));
    report.add("psi(7,-133) = (-3628425/17689, 8081948160/2352637) on C1",
        psi(QuarticPoint(7, -133)) == special && on_curve(C1, special) && phi(special) == QuarticPoint(7, -133));
    report.add("(1551, 59904) on C1 and (1551, -5990) is not",
        on_curve(C1, RationalPoint(1551, 59904)) && !on_curve(C1, RationalPoint(1551, -5990)));
    report.add("exceptional images lie on C2",
        quartic_on_curve(C2, QuarticPoint(Rational(-10898, 5187), Rational(-477412081, 8968323)))
            && quartic_on_curve(C2, QuarticPoint(Rational(16085, 5187), Rational(477412081, 8968323))));
    return report;
}

/// The two rational points at infinity of C2 are phi of the two exceptional
/// points; this numerically follows phi along C1 towards x0 = -45 and 1551
/// on the y0 > 0 branch and reports sign(v/u^2) in the limit.
inline int infinity_branch_sign_near(double x0)
{
    // step inside the real locus of C1 (x0^3 - 92835 x0 + 1389150 > 0)
    auto rhs = [](double x) { return x * x * x - 92835.0 * x + 1389150.0; };
    double x = x0 + 1e-4;
    if (rhs(x) <= 0)
        x = x0 - 1e-4;
    double y = std::sqrt(rhs(x));
    double u = (565605.0 + x * (-948.0 + 7.0 * x) + 266.0 * y) / ((x - 1551.0) * (x + 45.0));
    double vn = 133.0 * (92385.0 + (x - 30.0) * x) * (-115425.0 + x * (1536.0 + x))
        + 234.0 * (-3922935.0 + x * (9010.0 + 41.0 * x)) * y;
    double v = vn / ((x - 1551.0) * (x - 1551.0) * (x + 45.0) * (x + 45.0));
    return v / (u * u) > 0 ? 1 : -1;
}

/**
 * Affine points with u = p/q, |p|, q <= height_bound, sorted by
 * (max(|p|,q), u, v). Squareness of q(u) is tested on the homogenized
 * integer value q^4 q(p/q) (after clearing coefficient denominators).
 */
inline std::vector<QuarticPoint> search_points(const QuarticCurve& C, long height_bound)
{
    if (height_bound < 1)
        throw std::invalid_argument("search_points: height bound must be >= 1");
    Integer den = 1;
    for (int k = 0; k <= 4; ++k)
        den = lcm_of(den, Integer(C.coefficient(k).get_den()));
    // make den a square so that den * q stays a square iff q is
    Integer scale = den * den;
    std::vector<Integer> a(5);
    for (int k = 0; k <= 4; ++k)
        a[static_cast<size_t>(k)] = Integer(C.coefficient(k) * Rational(scale));

    struct Found { long h; Rational u, v; };
    std::vector<Found> found;
    for (long q = 1; q <= height_bound; ++q) {
        for (long p = -height_bound; p <= height_bound; ++p) {
            if (std::gcd(std::labs(p), q) != 1)
                continue;
            Integer P(p), Q(q);
            Integer w2 = 0;
            Integer pk = 1;
            for (int k = 0; k <= 4; ++k) {
                Integer qk = 1;
                for (int i = 0; i < 4 - k; ++i)
                    qk *= Q;
                w2 += a[static_cast<size_t>(k)] * pk * qk;
                pk *= P;
            }
            auto w = exact_sqrt(w2);
            if (!w)
                continue;
            Rational u = make_rational(P, Q);
            Rational v = make_rational(*w, Q * Q * den);
            long h = std::max(std::labs(p), q);
            found.push_back({h, u, v});
            if (!is_zero(v))
                found.push_back({h, u, -v});
        }
    }
    std::sort(found.begin(), found.end(), [](const Found& l, const Found& r) {
        return std::tie(l.h, l.u, l.v) < std::tie(r.h, r.u, r.v);
    });
    std::vector<QuarticPoint> out;
    out.reserve(found.size());
    for (auto& f : found)
        out.emplace_back(f.u, f.v);
    return out;
}

/// Genus of y^2 = f(x) for squarefree f.
inline int hyperelliptic_genus(const RationalPolynomial& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("hyperelliptic_genus: f must be nonconstant");
    if (!is_squarefree(f))
        throw std::invalid_argument("hyperelliptic_genus: f is not squarefree");
    return (f.degree() - 1) / 2;
}

/// -55 + 192 x - 114 x^2 + 68 x^3 - 15 x^4 + 4 x^5.
inline RationalPolynomial two_torsion_quintic() { return RationalPolynomial{-55, 192, -114, 68, -15, 4}; }

/**
 * x0 = (-1 - u x + u^2 x)/(x - 1), y0 = -4x + 8ux takes the 2-torsion
 * condition curve of E_{u^2-u-3} to y0^2 = quintic(x0). Checked as a
 * divisibility in Q(x)[u]: the cubic is a quartic in u with leading
 * coefficient x^2/4.
 */
inline IdentityReport hyperelliptic_transform_check()
{
    using BP = BivariatePolynomial; // polynomials in u over Q(x)
    IdentityReport report{"2-torsion curve transform", {}};
    RationalFunction X = RationalFunction::variable();
    RationalFunction X2 = X * X;
    RationalFunction one(1);
    // 1 - x + x^3 + (x^2/4)(u^4 - 2u^3 - u^2 + 2u - 3)
    RationalFunction q = X2 / RationalFunction(4);
    BP cubic{one - X + X2 * X - RationalFunction(3) * q, RationalFunction(2) * q, RationalFunction(-1) * q,
        RationalFunction(-2) * q, q};
    RationalFunction inv = one / (X - one);
    BP x0{RationalFunction(-1) * inv, RationalFunction(-1) * X * inv, X * inv};
    BP y0{RationalFunction(-4) * X, RationalFunction(8) * X};
    BP f_of_x0;
    auto quintic = two_torsion_quintic();
    for (int k = quintic.degree(); k >= 0; --k)
        f_of_x0 = f_of_x0 * x0 + BP::constant(RationalFunction(quintic.coefficient(k)));
    BP target = y0 * y0 - f_of_x0;
    report.add("y0^2 - quintic(x0) is divisible by the 2-torsion cubic", divrem(target, cubic).second.is_zero());
    report.add("x = 1 is a pole of x0 and excluded", inv.has_pole_at(Rational(1)));

    // numeric spot check on real points of the cubic curve
    bool spot_ok = true;
    int spots = 0;
    for (int k = -6; k <= 6; ++k) {
        Rational xs = make_rational(k, 3);
        if (xs == 1 || is_zero(xs))
            continue;
        RationalPolynomial in_u;
        {
            std::vector<Rational> c;
            for (int i = 0; i <= 4; ++i)
                c.push_back(cubic.coefficient(i).evaluate(xs));
            in_u = RationalPolynomial(c);
        }
        for (double ur : approximate_real_roots(in_u, 1e-14)) {
            double xd = to_double(xs);
            double X0 = (-1.0 - ur * xd + ur * ur * xd) / (xd - 1.0);
            double Y0 = -4.0 * xd + 8.0 * ur * xd;
            double fx = -55 + X0 * (192 + X0 * (-114 + X0 * (68 + X0 * (-15 + 4 * X0))));
            double scale = std::max({1.0, std::fabs(Y0 * Y0), std::fabs(fx)});
            spot_ok = spot_ok && std::fabs(Y0 * Y0 - fx) / scale < 1e-6;
            ++spots;
        }
    }
    report.add("numeric spot check on " + std::to_string(spots) + " real points", spot_ok && spots > 0);
    report.add("quintic is squarefree with genus 2",
        is_squarefree(quintic) && hyperelliptic_genus(quintic) == 2);
    return report;
}

} // namespace ellrank

#endif
