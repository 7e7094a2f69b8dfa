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

#ifndef ELLRANK_SEARCH_HPP
#define ELLRANK_SEARCH_HPP

#include "weierstrass.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ellrank {

/**
 * Affine rational points with x = p/q, |p|, q <= height_bound, sorted by
 * (max(|p|,q), x, y).
 */
inline std::vector<RationalPoint> search_points(const RationalCurve& E, long height_bound)
{
    if (height_bound < 1)
        throw std::invalid_argument("search_points: height bound must be >= 1");
    struct Found { long h; Rational x, y; };
    std::vector<Found> found;
    for (long q = 1; q <= height_bound; ++q)
        for (long p = -height_bound; p <= height_bound; ++p) {
            if (std::gcd(std::labs(p), q) != 1)
                continue;
            Rational x = make_rational(p, q);
            long h = std::max(std::labs(p), q);
            for (auto& P : lift_x(E, x))
                found.push_back({h, P.x(), P.y()});
        }
    std::sort(found.begin(), found.end(),
        [](const Found& l, const Found& r) { return std::tie(l.h, l.x, l.y) < std::tie(r.h, r.x, r.y); });
    std::vector<RationalPoint> out;
    out.reserve(found.size());
    for (auto& f : found)
        out.emplace_back(f.x, f.y);
    return out;
}

} // namespace ellrank

#endif
