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

#ifndef ELLRANK_RATIONAL_FUNCTION_HPP
#define ELLRANK_RATIONAL_FUNCTION_HPP

#include "polynomial.hpp"

#include <stdexcept>
#include <string>

namespace ellrank {

/// Element of Q(u): coprime numerator and monic denominator.
class RationalFunction
{
    public:
        RationalFunction() : _num(), _den(RationalPolynomial::constant(Rational(1))) {}

        RationalFunction(int c) : RationalFunction(Rational(c)) {}

        RationalFunction(const Rational& c)
            : _num(RationalPolynomial::constant(c)), _den(RationalPolynomial::constant(Rational(1)))
        {
        }

        RationalFunction(RationalPolynomial num) : RationalFunction(std::move(num), RationalPolynomial::constant(Rational(1))) {}

        RationalFunction(RationalPolynomial num, RationalPolynomial den) : _num(std::move(num)), _den(std::move(den))
        {
            if (_den.is_zero())
                throw std::domain_error("rational function with zero denominator");
            normalize();
        }

        /// The parameter u.
        static RationalFunction variable() { return RationalFunction(RationalPolynomial::x()); }

        const RationalPolynomial& numerator() const { return _num; }
        const RationalPolynomial& denominator() const { return _den; }

        bool is_zero() const { return _num.is_zero(); }

        bool is_constant() const { return _num.degree() <= 0 && _den.degree() == 0; }

        /// Value at u0; throws at a pole.
        Rational evaluate(const Rational& u0) const
        {
            Rational d = _den.evaluate(u0);
            if (ellrank::is_zero(d))
                throw std::domain_error("rational function has a pole at " + u0.get_str());
            Rational n = _num.evaluate(u0);
            return n / d;
        }

        bool has_pole_at(const Rational& u0) const { return ellrank::is_zero(_den.evaluate(u0)); }

        RationalFunction operator-() const { return RationalFunction(-_num, _den, already_reduced{}); }

        friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
        {
            if (a._den == b._den)
                return RationalFunction(a._num + b._num, a._den);
            return RationalFunction(a._num * b._den + b._num * a._den, a._den * b._den);
        }

        friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

        friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
        {
            return RationalFunction(a._num * b._num, a._den * b._den);
        }

        friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
        {
            if (b.is_zero())
                throw std::domain_error("rational function division by zero");
            return RationalFunction(a._num * b._den, a._den * b._num);
        }

        RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
        RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
        RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
        RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

        friend bool operator==(const RationalFunction& a, const RationalFunction& b)
        {
            return a._num == b._num && a._den == b._den;
        }
        friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

        std::string to_string(const std::string& var = "u") const
        {
            if (_den.degree() == 0)
                return ellrank::to_string(_num, var);
            return "(" + ellrank::to_string(_num, var) + ")/(" + ellrank::to_string(_den, var) + ")";
        }

    private:
        struct already_reduced {};

        RationalFunction(RationalPolynomial num, RationalPolynomial den, already_reduced)
            : _num(std::move(num)), _den(std::move(den))
        {
        }

        void normalize()
        {
            if (_num.is_zero()) {
                _den = RationalPolynomial::constant(Rational(1));
                return;
            }
            if (_den.degree() > 0 && _num.degree() >= 0) {
                auto g = gcd(_num, _den);
                if (g.degree() > 0) {
                    _num = divrem(_num, g).first;
                    _den = divrem(_den, g).first;
                }
            }
            Rational lead = _den.leading();
            if (lead != 1) {
                Rational inv = 1 / lead;
                _num = inv * _num;
                _den = inv * _den;
            }
        }

        RationalPolynomial _num;
        RationalPolynomial _den;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// Polynomials in a second variable with coefficients in Q(u).
using BivariatePolynomial = Polynomial<RationalFunction>;

} // namespace ellrank

#endif
