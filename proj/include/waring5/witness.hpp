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

#ifndef WARING5_WITNESS_HPP
#define WARING5_WITNESS_HPP

#include "classify.hpp"
#include "construct.hpp"
#include "decomposition.hpp"
#include "sylvester.hpp"

namespace waring5 {

struct WitnessOptions {
    bool rational_only = false;
    uint64_t seed = 0;
    unsigned plane_point_tries = 64;  // retries for plane_upper_bound sampling
    SylvesterOptions sylvester;
};

/// Explicit Waring decomposition of the exact Theorem-table cardinality:
/// per-component jet pieces are decomposed against their rational normal
/// curves (Sylvester), reduced components contribute their single term;
/// blocks are concatenated and labeled. Throws WitnessSearchFailed when the
/// rational search is exhausted and numeric output is disabled.
Decomposition decompose(const SamplePoint& sp, const WitnessOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    std::optional<BigFloat> residual;
    std::string diagnostic;
};

/// Exact re-expansion and comparison for exact flags; coefficientwise
/// relative residual (against max |coeff of f|) for numeric. Also asserts
/// pairwise non-proportionality of the linear forms.
VerifyResult verify_decomposition(const HomogPoly& f, const Decomposition& D);

/// Structural postconditions: each labeled block lies in the span of its
/// component's curve, sizes match the per-type counts, and no term sits at
/// the support of a non-reduced component.
bool structure_check(const Decomposition& D, const JetScheme& A, unsigned d);

/// Plane case: bound 2d with a reduced conic through A when one exists,
/// else the double-line analysis (bound 2d with L ∪ D when deg(L∩A) >= 4,
/// bound 3d with the cubic L ∪ D1 ∪ D2 when deg(L∩A) = 3); optionally a
/// decomposition from random rational points on the reduced curve.
struct PlaneBound {
    unsigned bound = 0;
    HomogPoly curve;  // the reduced plane curve (degree <= 3)
    std::optional<Decomposition> decomposition;
};

PlaneBound plane_upper_bound(const HomogPoly& f, const JetScheme& A, unsigned d,
                             const WitnessOptions& opts = {});

}  // namespace waring5

#endif
