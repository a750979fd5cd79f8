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

#ifndef WARING5_APOLAR_HPP
#define WARING5_APOLAR_HPP

#include "matrix.hpp"
#include "poly.hpp"

namespace waring5 {

/// Matrix of the contraction map in split degree (a, d-a): rows indexed by
/// degree-a dual monomials, columns by degree-(d-a) monomials, both in
/// canonical term order; entry = coefficient of the column monomial in
/// apolar_apply(row monomial, f).
struct Catalecticant {
    unsigned a = 0;
    unsigned d = 0;
    Matrix matrix;
};

Catalecticant catalecticant(const HomogPoly& f, unsigned a);

/// Concision data. restriction is an invertible (m+1)x(m+1) change of
/// coordinates whose first essential_count columns span the essential
/// directions: substitute_linear(f, restriction) depends only on
/// x0..x_{essential_count-1}, and concise is that polynomial rewritten in
/// essential_count variables. section = restriction^{-1} recovers f:
/// substitute_linear(pad(concise), section) == f.
struct ConcisionReport {
    size_t essential_count = 0;
    Matrix restriction;
    Matrix section;
    HomogPoly concise;
};

ConcisionReport essential_vars(const HomogPoly& f);

/// Widens a polynomial to more variables (new variables unused).
HomogPoly pad_vars(const HomogPoly& f, unsigned nvars);

/// max over 1 <= a <= d-1 of rank catalecticant(f, a). Classical lower
/// bound for the border rank.
size_t border_rank_lower_bound(const HomogPoly& f);

/// Basis of ker catalecticant(f, k) as degree-k dual forms.
std::vector<HomogPoly> apolar_ideal_slice(const HomogPoly& f, unsigned k);

}  // namespace waring5

#endif
