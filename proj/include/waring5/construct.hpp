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

#ifndef WARING5_CONSTRUCT_HPP
#define WARING5_CONSTRUCT_HPP

#include <cstdint>

#include "schemes.hpp"

namespace waring5 {

/// A sampled point f = sum_i sum_j c_{i,j} jet_j(path_i, d) with every top
/// coefficient c_{i,b_i-1} nonzero, guaranteed concise in 5 variables with
/// catalecticant border-rank bound exactly 5.
struct SamplePoint {
    HomogPoly f;
    JetScheme scheme;
    std::vector<std::vector<Rational>> coefficients;
    uint64_t seed = 0;
    unsigned d = 0;
};

/// Canonical scheme of the given type: partitions the first five coordinate
/// directions among components; component i runs on its rational normal
/// curve c_i(t) = sum_{j<b_i} t^j e_{k(i)+j}.
JetScheme canonical_scheme(const SchemeType& type, unsigned m);

struct SampleOptions {
    unsigned coeff_height = 100;
    bool unit_coefficients = false;  // all c_{i,j} = 1 (still deterministic)
};

/// Draws coefficients at the configured height, re-drawing until every top
/// coefficient is nonzero, then re-verifies essential_vars = 5 and
/// border_rank_lower_bound = 5 before returning. Refuses d < 9.
SamplePoint sample_point(const JetScheme& A, unsigned d, uint64_t seed,
                         const SampleOptions& opts = {});

/// Invertible (m+1)x(m+1) rational matrix, entries drawn at the given
/// height, resampled until invertible. Deterministic per seed.
Matrix random_projectivity(unsigned m, uint64_t seed, unsigned height = 100);

/// Applies a projectivity to scheme data (path points p -> M p).
JetScheme transform_scheme(const JetScheme& A, const Matrix& M);

std::string sample_to_json(const SamplePoint& sp);
SamplePoint sample_from_json(const std::string& text);

}  // namespace waring5

#endif
