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

#ifndef WARING5_STRATA_HPP
#define WARING5_STRATA_HPP

#include "schemes.hpp"

namespace waring5 {

struct StratumProbe {
    SchemeType type;
    unsigned m = 4;
    unsigned d = 9;
    size_t parameter_count = 0;
    size_t jacobian_rank = 0;          // max over trials = affine cone rank
    size_t projective_dimension = 0;   // jacobian_rank - 1
    std::vector<size_t> trial_ranks;
};

/// Exact rank of the Jacobian of the stratum parametrization (path points in
/// normalized charts + jet coefficients -> coefficient space) at random
/// rational parameters; derivatives are exact (the map is polynomial).
/// Expected projective_dimension = 5m + s - 1.
StratumProbe stratum_dimension(const SchemeType& type, unsigned m, unsigned d, uint64_t seed,
                               unsigned trials = 3);

std::string probe_to_json(const StratumProbe& p);
std::string probe_csv_header();
std::string probe_csv_line(const StratumProbe& p);

}  // namespace waring5

#endif
