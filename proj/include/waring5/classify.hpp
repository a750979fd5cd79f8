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

#ifndef WARING5_CLASSIFY_HPP
#define WARING5_CLASSIFY_HPP

#include "apolar.hpp"
#include "construct.hpp"
#include "schemes.hpp"

namespace waring5 {

/// Exact symmetric rank by combinatorial type, d >= 9:
///   (1;5) -> 4d-3   (2;3,2), (2;4,1) -> 3d-1
///   (3;3,1,1), (3;2,2,1) -> 2d+1   (4;2,1,1,1) -> d+3   (5;1^5) -> 5.
size_t rank_from_type(const SchemeType& type, unsigned d);

struct RankReport {
    SchemeType type;
    size_t rank = 0;
    JetScheme scheme;
    size_t essential = 0;
    struct Check {
        std::string name;
        bool ok = false;
    };
    std::vector<Check> checks;

    bool all_ok() const;
};

/// Recovers the unique degree-5 scheme evincing the cactus rank of f
/// (d >= 9) from the apolar ideal slices: support from the multiplication
/// pencil on the degree-3/4 quotients under a random rational projection,
/// jet paths by greedy order-by-order linear fits. Requires rational
/// support; throws IrrationalSupport otherwise.
JetScheme recover_scheme(const HomogPoly& f, unsigned d, uint64_t seed = 0);

/// Checks (a) linear independence, (b) membership f in <nu_d(A)>,
/// (c) minimality against the s maximal truncations, (d) catalecticant
/// border bound = 5. Failures are reported in the check list, not thrown.
RankReport verify_certificate(const HomogPoly& f, const JetScheme& A, unsigned d);

/// recover_scheme followed by verify_certificate.
RankReport classify_rank(const HomogPoly& f, unsigned d, uint64_t seed = 0);

std::string report_to_json(const RankReport& r);

}  // namespace waring5

#endif
