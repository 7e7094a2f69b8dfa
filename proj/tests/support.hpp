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

#ifndef ELLRANK_TEST_SUPPORT_HPP
#define ELLRANK_TEST_SUPPORT_HPP

#include "ellrank/ellrank.hpp"

#include <random>
#include <vector>

namespace ellrank::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_bound, long den_bound)
{
    return make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline RationalPolynomial random_polynomial(Rng& rng, int degree, long bound)
{
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(random_rational(rng, bound, 3));
    if (is_zero(c.back()))
        c.back() = 1;
    return RationalPolynomial(c);
}

/// A family curve E_t with a nonsingular integer t in [-30, 30].
inline RationalCurve random_family_curve(Rng& rng)
{
    for (;;) {
        try {
            return family_curve(Rational(uniform(rng, -30, 30)));
        } catch (const SingularCurve&) {
        }
    }
}

/// a(0,1) + b(1,1) on E_t with |a|, |b| <= bound.
inline RationalPoint random_family_point(Rng& rng, const RationalCurve& E, long bound = 3)
{
    long a = uniform(rng, -bound, bound);
    long b = uniform(rng, -bound, bound);
    return linear_combination(E, {a, b}, {RationalPoint(0, 1), RationalPoint(1, 1)});
}

/// y^2 = x^3 + a x + b through a random integer point, plus that point.
inline std::pair<RationalCurve, RationalPoint> random_short_curve_with_point(Rng& rng)
{
    for (;;) {
        long x = uniform(rng, -9, 9), y = uniform(rng, -9, 9), a = uniform(rng, -9, 9);
        long b = y * y - x * x * x - a * x;
        try {
            RationalCurve E(0, 0, 0, a, b);
            return {E, RationalPoint(x, y)};
        } catch (const SingularCurve&) {
        }
    }
}

inline bool within(const HeightEstimate& h, double target, double slack = 1e-9)
{
    return std::fabs(h.value - target) <= h.error_bound + slack;
}

} // namespace ellrank::testing

#endif
