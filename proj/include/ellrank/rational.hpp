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

#ifndef ELLRANK_RATIONAL_HPP
#define ELLRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ellrank {

/// Exact rational. GMP keeps every value in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "p", "-p" or "p/q" (decimal digits only).
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
        ++start;
    s = s.substr(start);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto check_digits = [](const std::string& part, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+'))
            ++i;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_digits(num, true) || !check_digits(den, false))
        throw std::invalid_argument("malformed rational literal: " + s);
    if (num[0] == '+')
        num.erase(0, 1);
    return make_rational(Integer(num), Integer(den));
}

/// Always "p/q", including q = 1, so serialized values are self-describing.
inline std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "p" for integers, "p/q" otherwise. Used for human-facing text.
inline std::string to_short_string(const Rational& r)
{
    return r.get_str();
}

/// Natural log of |n| for arbitrarily large n, without overflow.
inline double log_abs(const Integer& n)
{
    if (n == 0)
        return -INFINITY;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

/// Decimal approximation that stays finite for huge numerators/denominators.
inline double to_double(const Rational& r)
{
    if (is_zero(r))
        return 0.0;
    double lg = log_abs(r.get_num()) - log_abs(r.get_den());
    if (lg < 700.0 && lg > -700.0)
        return r.get_d();
    return (sgn(r) < 0 ? -1.0 : 1.0) * std::exp(lg);
}

inline std::optional<Integer> exact_sqrt(const Integer& n)
{
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

/// Nonnegative square root if r is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r)
{
    auto num = exact_sqrt(Integer(r.get_num()));
    if (!num)
        return std::nullopt;
    auto den = exact_sqrt(Integer(r.get_den()));
    if (!den)
        return std::nullopt;
    return make_rational(*num, *den);
}

inline Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace ellrank

#endif
