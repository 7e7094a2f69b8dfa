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


#ifndef ELLRANK_ELLRANK_HPP
#define ELLRANK_ELLRANK_HPP

// Everything except cache.hpp, which additionally needs libcrypto.

#include "family.hpp"
#include "heights.hpp"
#include "polynomial.hpp"
#include "quartic.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "records.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "search.hpp"
#include "serialize.hpp"
#include "two_descent.hpp"
#include "weierstrass.hpp"

#endif
