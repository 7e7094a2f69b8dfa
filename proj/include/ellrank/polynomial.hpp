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

#ifndef ELLRANK_POLYNOMIAL_HPP
#define ELLRANK_POLYNOMIAL_HPP

#include "rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellrank {

/**
 * Dense univariate polynomial over a field F, coefficients lowest degree
 * first. Trailing zeros are always stripped, so the zero polynomial has no
 * coefficients and degree() == -1.
 *
 * F needs F(int), the four field operations, operator== and a free
 * is_zero(const F&).
 */
template <class F>
class Polynomial
{
    public:
        using coefficient_type = F;

        Polynomial() = default;

        explicit Polynomial(std::vector<F> coeffs) : _c(std::move(coeffs)) { trim(); }

        Polynomial(std::initializer_list<F> coeffs) : _c(coeffs) { trim(); }

        /// Constant polynomial.
        Polynomial(const F& c) : _c{c} { trim(); }

        static Polynomial constant(const F& c) { return Polynomial(std::vector<F>{c}); }

        static Polynomial monomial(const F& c, int k)
        {
            std::vector<F> v(static_cast<size_t>(k) + 1, F(0));
            v.back() = c;
            return Polynomial(std::move(v));
        }

        /// The indeterminate itself.
        static Polynomial x() { return monomial(F(1), 1); }

        int degree() const { return static_cast<int>(_c.size()) - 1; }
        bool is_zero() const { return _c.empty(); }
        const std::vector<F>& coefficients() const { return _c; }

        F coefficient(int k) const
        {
            if (k < 0 || k > degree())
                return F(0);
            return _c[static_cast<size_t>(k)];
        }

        const F& leading() const
        {
            if (_c.empty())
                throw std::domain_error("leading coefficient of zero polynomial");
            return _c.back();
        }

        template <class T = F>
        T evaluate(const T& at) const
        {
            T acc(0);
            for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
                acc = acc * at;
                acc = acc + T(*it);
            }
            return acc;
        }

        /// p(q(x)).
        Polynomial compose(const Polynomial& inner) const
        {
            Polynomial acc;
            for (auto it = _c.rbegin(); it != _c.rend(); ++it)
                acc = acc * inner + constant(*it);
            return acc;
        }

        Polynomial derivative() const
        {
            std::vector<F> d;
            for (size_t k = 1; k < _c.size(); ++k)
                d.push_back(_c[k] * F(static_cast<int>(k)));
            return Polynomial(std::move(d));
        }

        Polynomial monic() const
        {
            if (is_zero())
                return *this;
            F lead = leading();
            std::vector<F> v;
            v.reserve(_c.size());
            for (const auto& c : _c)
                v.push_back(c / lead);
            return Polynomial(std::move(v));
        }

        Polynomial operator-() const
        {
            std::vector<F> v;
            v.reserve(_c.size());
            for (const auto& c : _c)
                v.push_back(F(0) - c);
            return Polynomial(std::move(v));
        }

        friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
        {
            std::vector<F> v(std::max(a._c.size(), b._c.size()), F(0));
            for (size_t i = 0; i < a._c.size(); ++i)
                v[i] = v[i] + a._c[i];
            for (size_t i = 0; i < b._c.size(); ++i)
                v[i] = v[i] + b._c[i];
            return Polynomial(std::move(v));
        }

        friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

        friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
        {
            if (a.is_zero() || b.is_zero())
                return {};
            std::vector<F> v(a._c.size() + b._c.size() - 1, F(0));
            for (size_t i = 0; i < a._c.size(); ++i)
                for (size_t j = 0; j < b._c.size(); ++j)
                    v[i + j] = v[i + j] + a._c[i] * b._c[j];
            return Polynomial(std::move(v));
        }

        friend Polynomial operator*(const F& s, const Polynomial& p)
        {
            std::vector<F> v;
            v.reserve(p._c.size());
            for (const auto& c : p._c)
                v.push_back(s * c);
            return Polynomial(std::move(v));
        }

        Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
        Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
        Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

        friend bool operator==(const Polynomial& a, const Polynomial& b) { return a._c == b._c; }
        friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

        Polynomial pow(unsigned n) const
        {
            Polynomial acc = constant(F(1));
            Polynomial base = *this;
            while (n) {
                if (n & 1u)
                    acc = acc * base;
                n >>= 1u;
                if (n)
                    base = base * base;
            }
            return acc;
        }

    private:
        void trim()
        {
            while (!_c.empty() && ellrank_is_zero(_c.back()))
                _c.pop_back();
        }

        static bool ellrank_is_zero(const F& c)
        {
            using ellrank::is_zero;
            return is_zero(c);
        }

        std::vector<F> _c;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divrem(const Polynomial<F>& a, const Polynomial<F>& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = a.coefficients();
    int db = b.degree();
    int da = a.degree();
    if (da < db)
        return {Polynomial<F>{}, a};
    std::vector<F> quot(static_cast<size_t>(da - db) + 1, F(0));
    F lead = b.leading();
    for (int k = da - db; k >= 0; --k) {
        F c = rem[static_cast<size_t>(k + db)] / lead;
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& slot = rem[static_cast<size_t>(k + i)];
            slot = slot - c * b.coefficients()[static_cast<size_t>(i)];
        }
    }
    rem.resize(static_cast<size_t>(db));
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is an error.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b)
{
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

template <class F>
bool is_squarefree(const Polynomial<F>& p)
{
    if (p.degree() <= 0)
        return !p.is_zero();
    return gcd(p, p.derivative()).degree() == 0;
}

/// Exact square root in F[x] by matching coefficients from the top down.
/// `root_of_leading` supplies sqrt in F for the leading coefficient.
template <class F, class SqrtFn>
std::optional<Polynomial<F>> polynomial_sqrt(const Polynomial<F>& p, SqrtFn&& root_of_leading)
{
    if (p.is_zero())
        return Polynomial<F>{};
    if (p.degree() % 2 != 0)
        return std::nullopt;
    int m = p.degree() / 2;
    std::optional<F> top = root_of_leading(p.leading());
    if (!top)
        return std::nullopt;
    std::vector<F> s(static_cast<size_t>(m) + 1, F(0));
    s[static_cast<size_t>(m)] = *top;
    F twice_top = F(2) * *top;
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of x^(m+k) in s^2 is 2 s_m s_k + sum_{i+j=m+k, k<i,j<m} s_i s_j
        F acc = p.coefficient(m + k);
        for (int i = k + 1; i < m; ++i) {
            int j = m + k - i;
            if (j > k && j < m)
                acc = acc - s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
        }
        s[static_cast<size_t>(k)] = acc / twice_top;
    }
    Polynomial<F> root(std::move(s));
    if (root * root != p)
        return std::nullopt;
    return root;
}

inline std::optional<Polynomial<Rational>> polynomial_sqrt(const Polynomial<Rational>& p)
{
    return polynomial_sqrt(p, [](const Rational& c) { return exact_sqrt(c); });
}

inline bool is_perfect_square(const Polynomial<Rational>& p) { return polynomial_sqrt(p).has_value(); }

inline std::string to_string(const Polynomial<Rational>& p, const std::string& var = "x")
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coefficient(k);
        if (is_zero(c))
            continue;
        Rational mag = abs(c);
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1 && k > 0;
        if (!unit)
            out << mag.get_str();
        if (k > 0) {
            if (!unit)
                out << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

using RationalPolynomial = Polynomial<Rational>;

} // namespace ellrank

#endif
