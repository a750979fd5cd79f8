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

#ifndef WARING5_SYLVESTER_HPP
#define WARING5_SYLVESTER_HPP

#include <optional>

#include "decomposition.hpp"
#include "poly.hpp"
#include "upoly.hpp"

namespace waring5 {

/// Decomposition of a binary form g = sum lambda_i (alpha_i x + beta_i y)^D,
/// roots pairwise distinct as projective pairs.
struct BinaryDecomposition {
    struct Term {
        Scalar lambda;
        Scalar alpha, beta;
    };
    std::vector<Term> terms;
    Exactness exactness = Exactness::rational;
    std::optional<BigFloat> residual;
};

struct SylvesterOptions {
    uint64_t seed = 0;
    unsigned random_squarefree_tries = 32;  // kernel square-freeness draws
    unsigned rational_tries = 32;           // rational node-completion draws
    unsigned node_height = 50;              // height of free rational nodes
};

/// Sylvester rank of a nonzero binary form: r1 = first degree with a
/// nontrivial catalecticant kernel; returns r1 when the kernel holds a
/// square-free element (randomized draws, then a small deterministic
/// sweep), else D - r1 + 2.
size_t binary_rank(const HomogPoly& g, const SylvesterOptions& opts = {});

/// Explicit decomposition of cardinality binary_rank(g): rational roots
/// when the node search finds them, roots of unity for monomial forms,
/// big-float roots otherwise (nullopt if rational_only and no rational
/// witness was found).
std::optional<BinaryDecomposition> binary_decomposition(const HomogPoly& g, bool rational_only,
                                                        const SylvesterOptions& opts = {});

/// Verifies sum lambda_i (alpha x + beta y)^D == g; exact flags compare
/// exactly, numeric returns the relative coefficientwise residual.
bool verify_binary_decomposition(const HomogPoly& g, const BinaryDecomposition& dec,
                                 BigFloat* residual_out = nullptr);

// -- Rational-normal-curve pullback ---------------------------------------

struct CurveDecomposition;  // fwd

/// Jet-basis identification: writes f in the jet coordinates of the degree-e
/// path (rows jet_0..jet_{e d}) and returns the associated binary form of
/// degree e·d. Throws NotOnCurve when f is outside the span.
HomogPoly curve_pullback(const HomogPoly& f, const CurvePath& path, unsigned d);

struct CurveTerm {
    Scalar lambda;
    std::vector<Scalar> point;  // point of the affine cone on the curve
};

struct CurveRankDecomposition {
    std::vector<CurveTerm> terms;
    Exactness exactness = Exactness::rational;
    std::optional<BigFloat> residual;
};

/// Sylvester through the curve: pulls f back to a binary form, decomposes,
/// and pushes roots forward to points path(alpha, beta) on the curve.
/// The result satisfies f = sum lambda_i (point_i · x)^d (exactly for
/// exact flags; within residual for numeric).
std::optional<CurveRankDecomposition> curve_rank_decomposition(const HomogPoly& f,
                                                               const CurvePath& path, unsigned d,
                                                               bool rational_only = false,
                                                               const SylvesterOptions& opts = {});

// -- numeric root machinery (shared with classify) -------------------------

/// All complex roots of a square-free rational polynomial, Durand–Kerner
/// with Newton polish at the working precision.
std::vector<BigComplex> complex_roots(const UPoly& p);

/// Continued-fraction reconstruction of a rational from a big-float
/// approximation (nullopt when no candidate below the denominator cap
/// matches to within the tolerance).
std::optional<Rational> rational_reconstruct(const BigFloat& x, const Int& max_den);

/// Rational roots of p (exact, via numeric isolation + reconstruction +
/// exact verification). Returns nullopt if any root fails reconstruction;
/// multiplicities are not handled (p must be square-free). The denominator
/// cap defaults to the documented 10^6 bound of the witness search.
std::optional<std::vector<Rational>> all_rational_roots(const UPoly& p,
                                                        const Int& max_den = Int(1000000));

}  // namespace waring5

#endif
