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

#ifndef ELLRANK_ROOTS_HPP
#define ELLRANK_ROOTS_HPP

#include "polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ellrank {

/// Half-open interval (lo, hi] of the real line with rational endpoints.
struct RootInterval
{
    Rational lo;
    Rational hi;
};

struct RationalRoots
{
    std::vector<Rational> roots; // sorted ascending, distinct
    bool truncated = false;      // some real root could not be ruled rational or irrational
};

namespace detail {

/// Scales p to integer coefficients with content 1 (same roots).
inline RationalPolynomial primitive_integer_form(const RationalPolynomial& p)
{
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients())
        den_lcm = lcm_of(den_lcm, Integer(c.get_den()));
    Integer content = 0;
    for (const auto& c : p.coefficients())
        content = gcd_of(content, Integer(c.get_num() * (den_lcm / c.get_den())));
    if (content == 0)
        content = 1;
    return make_rational(den_lcm, content) * p;
}

/// p / gcd(p, p'): keeps every root once.
inline RationalPolynomial squarefree_part(const RationalPolynomial& p)
{
    if (p.degree() <= 0)
        return p;
    auto g = gcd(p, p.derivative());
    if (g.degree() == 0)
        return p;
    return divrem(p, g).first;
}

class SturmChain
{
    public:
        explicit SturmChain(const RationalPolynomial& p)
        {
            _chain.push_back(p);
            _chain.push_back(p.derivative());
            while (!_chain.back().is_zero() && _chain.back().degree() > 0) {
                auto r = divrem(_chain[_chain.size() - 2], _chain.back()).second;
                if (r.is_zero())
                    break;
                _chain.push_back(-r);
            }
        }

        int variations(const Rational& x) const
        {
            int count = 0;
            int last = 0;
            for (const auto& q : _chain) {
                Rational v = q.evaluate(x);
                int s = sgn(v);
                if (s == 0)
                    continue;
                if (last != 0 && s != last)
                    ++count;
                last = s;
            }
            return count;
        }

        /// Distinct real roots in (lo, hi].
        int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

    private:
        std::vector<RationalPolynomial> _chain;
};

inline Rational cauchy_bound(const RationalPolynomial& p)
{
    Rational lead = abs(p.leading());
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k)
        m = std::max(m, Rational(abs(p.coefficient(k)) / lead));
    return Rational(floor_of(m) + 2);
}

} // namespace detail

/// Simplest rational (least denominator) in the closed interval [lo, hi].
inline Rational simplest_rational_between(Rational lo, Rational hi)
{
    if (hi < lo)
        std::swap(lo, hi);
    Integer fl = floor_of(lo);
    if (fl == lo)
        return lo;
    if (Rational(fl + 1) <= hi)
        return Rational(fl + 1);
    Rational lo_frac = lo - fl;
    Rational hi_frac = hi - fl;
    return Rational(fl) + 1 / simplest_rational_between(1 / hi_frac, 1 / lo_frac);
}

/**
 * Isolating intervals for the distinct real roots of p: every interval
 * (lo, hi] holds exactly one root and has width at most `max_width`.
 * Roots hit exactly by a bisection point come back as degenerate
 * intervals with lo == hi.
 */
inline std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p, const Rational& max_width)
{
    if (p.is_zero())
        throw std::domain_error("isolating roots of the zero polynomial");
    auto g = detail::squarefree_part(p);
    std::vector<RootInterval> out;
    if (g.degree() <= 0)
        return out;
    detail::SturmChain sturm(g);
    Rational bound = detail::cauchy_bound(g);

    std::vector<RootInterval> work{{-bound, bound}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int n = sturm.count(iv.lo, iv.hi);
        if (n == 0)
            continue;
        if (is_zero(g.evaluate(iv.hi)) && n == 1) {
            out.push_back({iv.hi, iv.hi});
            continue;
        }
        if (n == 1 && iv.hi - iv.lo <= max_width) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
    return out;
}

/// Real roots as doubles (each within `eps`), for numeric spot checks.
inline std::vector<double> approximate_real_roots(const RationalPolynomial& p, double eps = 1e-12)
{
    std::vector<double> out;
    Rational width(eps);
    for (const auto& iv : isolate_real_roots(p, width))
        out.push_back(to_double((iv.lo + iv.hi) / 2));
    return out;
}

/**
 * Rational roots of p.
 *
 * Each real root is isolated by exact Sturm bisection and then narrowed
 * until it is pinned down:
 *  - the simplest rational in a window narrower than 1/D^2 is the only
 *    candidate with denominator at most D = min(denominator_bound, A);
 *  - any rational root has A*r integral, where A is the leading coefficient
 *    of the primitive integer form, so a window narrower than 1/A leaves a
 *    single lattice candidate N/A. This step runs while A has at most
 *    `lattice_bits` bits.
 * Candidates are verified by exact substitution, so reported roots are
 * always roots. `truncated` is set when some root escaped both checks.
 */
inline RationalRoots rational_roots(const RationalPolynomial& p, const Integer& denominator_bound = 1000000,
    unsigned lattice_bits = 8192)
{
    if (p.is_zero())
        throw std::domain_error("rational roots of the zero polynomial");
    RationalRoots result;
    auto g = detail::primitive_integer_form(detail::squarefree_part(p));
    if (g.degree() <= 0)
        return result;

    detail::SturmChain sturm(g);
    Integer lead = abs(g.leading().get_num());
    Integer max_den = std::min(Integer(denominator_bound), lead);
    if (max_den < 1)
        max_den = 1;
    bool lattice_ok = mpz_sizeinbase(lead.get_mpz_t(), 2) <= lattice_bits;

    auto refine = [&](RootInterval iv, const Rational& width) -> RootInterval {
        while (iv.hi - iv.lo >= width && iv.lo != iv.hi) {
            Rational mid = (iv.lo + iv.hi) / 2;
            if (is_zero(g.evaluate(mid)))
                return {mid, mid};
            if (sturm.count(iv.lo, mid) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        return iv;
    };

    for (RootInterval iv : isolate_real_roots(g, Rational(1))) {
        if (iv.lo == iv.hi) {
            result.roots.push_back(iv.hi);
            continue;
        }
        iv = refine(iv, Rational(1, max_den * max_den));
        if (iv.lo == iv.hi) {
            result.roots.push_back(iv.hi);
            continue;
        }
        Rational cand = simplest_rational_between(iv.lo, iv.hi);
        if (cand > iv.lo && cand <= iv.hi && cand.get_den() <= max_den && is_zero(g.evaluate(cand))) {
            result.roots.push_back(cand);
            continue;
        }
        if (lead <= max_den)
            continue; // every admissible denominator has been covered
        if (!lattice_ok) {
            result.truncated = true;
            continue;
        }
        iv = refine(iv, Rational(1, lead));
        if (iv.lo == iv.hi) {
            result.roots.push_back(iv.hi);
            continue;
        }
        Rational n = floor_of(Rational(iv.hi * lead));
        Rational lattice = n / lead;
        if (lattice > iv.lo && is_zero(g.evaluate(lattice)))
            result.roots.push_back(lattice);
    }
    std::sort(result.roots.begin(), result.roots.end());
    result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
    return result;
}

} // namespace ellrank

#endif
