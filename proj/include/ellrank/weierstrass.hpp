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

#ifndef ELLRANK_WEIERSTRASS_HPP
#define ELLRANK_WEIERSTRASS_HPP

#include "polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellrank {

class SingularCurve : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

template <class F>
struct CurveInvariants
{
    F b2, b4, b6, b8;
    F c4, c6;
    F discriminant;
    F j;
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
template <class F>
class WeierstrassCurve
{
    public:
        WeierstrassCurve(F a1, F a2, F a3, F a4, F a6)
            : _a1(std::move(a1)), _a2(std::move(a2)), _a3(std::move(a3)), _a4(std::move(a4)), _a6(std::move(a6))
        {
            if (is_zero_value(discriminant()))
                throw SingularCurve("singular Weierstrass curve (discriminant 0)");
        }

        const F& a1() const { return _a1; }
        const F& a2() const { return _a2; }
        const F& a3() const { return _a3; }
        const F& a4() const { return _a4; }
        const F& a6() const { return _a6; }

        F b2() const { return _a1 * _a1 + F(4) * _a2; }
        F b4() const { return F(2) * _a4 + _a1 * _a3; }
        F b6() const { return _a3 * _a3 + F(4) * _a6; }
        F b8() const
        {
            F t = _a1 * _a1 * _a6 + F(4) * _a2 * _a6;
            t = t - _a1 * _a3 * _a4 + _a2 * _a3 * _a3 - _a4 * _a4;
            return t;
        }
        F c4() const
        {
            F b2v = b2();
            return b2v * b2v - F(24) * b4();
        }
        F c6() const
        {
            F b2v = b2();
            F b4v = b4();
            F t = F(0) - b2v * b2v * b2v;
            t = t + F(36) * b2v * b4v - F(216) * b6();
            return t;
        }
        F discriminant() const
        {
            F b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
            F t = F(0) - b2v * b2v * b8v;
            t = t - F(8) * b4v * b4v * b4v;
            t = t - F(27) * b6v * b6v;
            t = t + F(9) * b2v * b4v * b6v;
            return t;
        }

        CurveInvariants<F> invariants() const
        {
            CurveInvariants<F> inv{b2(), b4(), b6(), b8(), c4(), c6(), discriminant(), F(0)};
            inv.j = inv.c4 * inv.c4 * inv.c4 / inv.discriminant;
            return inv;
        }

        F j_invariant() const { return invariants().j; }

        friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b)
        {
            return a._a1 == b._a1 && a._a2 == b._a2 && a._a3 == b._a3 && a._a4 == b._a4 && a._a6 == b._a6;
        }

    private:
        static bool is_zero_value(const F& v)
        {
            using ellrank::is_zero;
            return is_zero(v);
        }

        F _a1, _a2, _a3, _a4, _a6;
};

/// Affine point or the point at infinity.
template <class F>
class CurvePoint
{
    public:
        CurvePoint() = default; // infinity

        CurvePoint(F x, F y) : _affine(true), _x(std::move(x)), _y(std::move(y)) {}

        static CurvePoint infinity() { return CurvePoint(); }

        bool is_infinity() const { return !_affine; }

        const F& x() const
        {
            if (!_affine)
                throw std::domain_error("point at infinity has no x-coordinate");
            return _x;
        }
        const F& y() const
        {
            if (!_affine)
                throw std::domain_error("point at infinity has no y-coordinate");
            return _y;
        }

        friend bool operator==(const CurvePoint& p, const CurvePoint& q)
        {
            if (p._affine != q._affine)
                return false;
            return !p._affine || (p._x == q._x && p._y == q._y);
        }
        friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }

    private:
        bool _affine = false;
        F _x{0};
        F _y{0};
};

using RationalCurve = WeierstrassCurve<Rational>;
using RationalPoint = CurvePoint<Rational>;

template <class F>
bool on_curve(const WeierstrassCurve<F>& E, const CurvePoint<F>& P)
{
    if (P.is_infinity())
        return true;
    const F& x = P.x();
    const F& y = P.y();
    F lhs = y * y + E.a1() * x * y + E.a3() * y;
    F rhs = x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
    return lhs == rhs;
}

template <class F>
CurvePoint<F> negate(const WeierstrassCurve<F>& E, const CurvePoint<F>& P)
{
    if (P.is_infinity())
        return P;
    F y = F(0) - P.y() - E.a1() * P.x() - E.a3();
    return CurvePoint<F>(P.x(), y);
}

/// Chord-tangent addition.
template <class F>
CurvePoint<F> add(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, const CurvePoint<F>& Q)
{
    using ellrank::is_zero;
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;
    const F& x1 = P.x();
    const F& y1 = P.y();
    const F& x2 = Q.x();
    const F& y2 = Q.y();
    F lambda, nu;
    if (x1 == x2) {
        F ysum = y1 + y2 + E.a1() * x2 + E.a3();
        if (is_zero(ysum))
            return CurvePoint<F>::infinity();
        F num = F(3) * x1 * x1 + F(2) * E.a2() * x1 + E.a4() - E.a1() * y1;
        F den = F(2) * y1 + E.a1() * x1 + E.a3();
        lambda = num / den;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    nu = y1 - lambda * x1;
    F x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
    F y3 = F(0) - (lambda + E.a1()) * x3 - nu - E.a3();
    return CurvePoint<F>(std::move(x3), std::move(y3));
}

template <class F>
CurvePoint<F> subtract(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, const CurvePoint<F>& Q)
{
    return add(E, P, negate(E, Q));
}

template <class F>
CurvePoint<F> doubled(const WeierstrassCurve<F>& E, const CurvePoint<F>& P)
{
    return add(E, P, P);
}

/// n*P by double-and-add; negative n goes through negate.
template <class F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& E, long n, const CurvePoint<F>& P)
{
    if (n < 0)
        return negate(E, scalar_mul(E, -n, P));
    CurvePoint<F> acc;
    CurvePoint<F> base = P;
    auto k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1ul)
            acc = add(E, acc, base);
        k >>= 1u;
        if (k)
            base = doubled(E, base);
    }
    return acc;
}

/// sum_i coeffs[i] * points[i].
template <class F>
CurvePoint<F> linear_combination(const WeierstrassCurve<F>& E, const std::vector<long>& coeffs,
    const std::vector<CurvePoint<F>>& points)
{
    if (coeffs.size() != points.size())
        throw std::invalid_argument("linear_combination: size mismatch");
    CurvePoint<F> acc;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            acc = add(E, acc, scalar_mul(E, coeffs[i], points[i]));
    return acc;
}

/// 4x^3 + b2 x^2 + 2 b4 x + b6; its roots are the x-coordinates of 2-torsion.
template <class F>
Polynomial<F> two_division_polynomial(const WeierstrassCurve<F>& E)
{
    return Polynomial<F>{E.b6(), F(2) * E.b4(), E.b2(), F(4)};
}

/// x^4 - b4 x^2 - 2 b6 x - b8, the numerator of x(2P).
template <class F>
Polynomial<F> duplication_numerator(const WeierstrassCurve<F>& E)
{
    return Polynomial<F>{F(0) - E.b8(), F(0) - F(2) * E.b6(), F(0) - E.b4(), F(0), F(1)};
}

/// x(2P) from x(P) alone.
template <class F>
F x_of_double(const WeierstrassCurve<F>& E, const F& x)
{
    using ellrank::is_zero;
    F den = two_division_polynomial(E).evaluate(x);
    if (is_zero(den))
        throw std::domain_error("x_of_double: point is 2-torsion");
    return duplication_numerator(E).evaluate(x) / den;
}

/// Isomorphic model y^2 = x^3 - 27 c4 x - 54 c6 with its coordinate change.
template <class F>
struct ShortForm
{
    WeierstrassCurve<F> curve;
    F b2, a1, a3;

    CurvePoint<F> map(const CurvePoint<F>& P) const
    {
        if (P.is_infinity())
            return P;
        F x = F(36) * P.x() + F(3) * b2;
        F y = F(108) * (F(2) * P.y() + a1 * P.x() + a3);
        return CurvePoint<F>(std::move(x), std::move(y));
    }
};

template <class F>
ShortForm<F> short_form(const WeierstrassCurve<F>& E)
{
    WeierstrassCurve<F> S(F(0), F(0), F(0), F(0) - F(27) * E.c4(), F(0) - F(54) * E.c6());
    return ShortForm<F>{std::move(S), E.b2(), E.a1(), E.a3()};
}

/// All rational points with the given x-coordinate (zero, one or two).
inline std::vector<RationalPoint> lift_x(const RationalCurve& E, const Rational& x)
{
    Rational b = E.a1() * x + E.a3();
    Rational c = x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
    Rational disc = b * b + 4 * c;
    std::vector<RationalPoint> out;
    auto s = exact_sqrt(disc);
    if (!s)
        return out;
    Rational y1 = (-b + *s) / 2;
    out.emplace_back(x, y1);
    if (!is_zero(*s)) {
        Rational y2 = (-b - *s) / 2;
        out.emplace_back(x, y2);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RationalPoint& P)
{
    if (P.is_infinity())
        return os << "O";
    return os << "(" << P.x().get_str() << ", " << P.y().get_str() << ")";
}

} // namespace ellrank

#endif
