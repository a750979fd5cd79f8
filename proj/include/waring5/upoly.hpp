/*
   Copyright 2026 The waring5 authors

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

#ifndef WARING5_UPOLY_HPP
#define WARING5_UPOLY_HPP

#include <vector>

#include "scalar.hpp"

namespace waring5 {

/// Dense univariate polynomials over Q, coefficients in ascending degree
/// order with no trailing zeros (zero polynomial = empty vector).
using UPoly = std::vector<Rational>;

UPoly up_trim(UPoly p);
int up_deg(const UPoly& p);  // -1 for zero
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const Rational& c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
UPoly up_derivative(const UPoly& a);
/// Monic gcd.
UPoly up_gcd(UPoly a, UPoly b);
Rational up_eval(const UPoly& a, const Rational& x);
UPoly up_monic(UPoly a);
/// True when gcd(p, p') is constant (p nonzero).
bool up_squarefree(const UPoly& p);
/// Expands prod (x - roots[i]).
UPoly up_from_roots(const std::vector<Rational>& roots);

}  // namespace waring5

#endif
