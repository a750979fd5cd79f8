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

#ifndef WARING5_DECOMPOSITION_HPP
#define WARING5_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace waring5 {

enum class Exactness { rational, cyclotomic, numeric };

const char* exactness_name(Exactness e);
Exactness exactness_parse(const std::string& s);
/// The weaker of two exactness levels (rational strongest).
Exactness exactness_meet(Exactness a, Exactness b);

/// A Waring expression f = sum lambda_i l_i^d. structure labels record
/// which component block each term serves ("A1", "A2", ..., or "reduced").
struct Decomposition {
    struct Term {
        Scalar lambda;
        std::vector<Scalar> linear_form;
        std::string structure;
    };
    std::vector<Term> terms;
    Exactness exactness = Exactness::rational;
    std::optional<BigFloat> residual;  // numeric only
};

std::string decomposition_to_json(const Decomposition& D);
Decomposition decomposition_from_json(const std::string& text);

}  // namespace waring5

#endif
