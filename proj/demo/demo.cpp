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

// Walks one C1 point through phi to a family member and certifies its four points.

#include "ellrank/ellrank.hpp"

#include <iostream>

using namespace ellrank;

int main(int argc, char** argv)
{
    long beta1 = argc > 1 ? std::stol(argv[1]) : -1;
    long beta2 = argc > 2 ? std::stol(argv[2]) : 0;

    auto P = c1_point(0, beta1, beta2);
    auto Q = phi(P);
    std::cout << "C1 point " << P << " -> C2 point " << Q << "\n";
    if (!Q.is_affine()) {
        std::cout << "lands at infinity; no family member\n";
        return 0;
    }
    Rational u = Q.u();
    auto E = quadratic_family_curve(u);
    std::cout << "u = " << u << ", t = " << quadratic_parameter(u) << ", j ~ " << to_double(E.j_invariant()) << "\n";

    auto pts = theorem_points(u, Q.v());
    for (const auto& p : pts)
        std::cout << "  " << p << (on_curve(E, p) ? "" : "  (off curve!)") << "\n";

    auto cert = certify_independence(E, pts);
    std::cout << "2-torsion trivial: " << std::boolalpha << cert.two_torsion_trivial << "\n";
    for (const auto& c : cert.checks) {
        std::cout << "  eps =";
        for (int e : c.epsilon)
            std::cout << " " << e;
        std::cout << (c.in_two_e ? "  in 2E" : "  not in 2E") << "\n";
    }
    std::cout << "rank >= 4 certified: " << cert.verdict << "\n";
    return cert.verdict ? 0 : 1;
}
