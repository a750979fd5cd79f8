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

#ifndef WARING5_ERRORS_HPP
#define WARING5_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace waring5 {

enum class errc {
    mixed_inexact_exact,
    degree_mismatch,
    var_mismatch,
    zero_polynomial,
    zero_form,
    bad_type,
    dependent_scheme,
    degree_too_small,
    non_reduced_input,
    not_on_curve,
    pullback_mismatch,
    not_border_rank_five,
    irrational_support,
    recovery_inconsistent,
    witness_search_failed,
    not_planar,
    not_in_span,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::mixed_inexact_exact: return "MixedInexactExact";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::var_mismatch: return "VarMismatch";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::zero_form: return "ZeroForm";
        case errc::bad_type: return "BadType";
        case errc::dependent_scheme: return "DependentScheme";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::non_reduced_input: return "NonReducedInput";
        case errc::not_on_curve: return "NotOnCurve";
        case errc::pullback_mismatch: return "PullbackMismatch";
        case errc::not_border_rank_five: return "NotBorderRankFive";
        case errc::irrational_support: return "IrrationalSupport";
        case errc::recovery_inconsistent: return "RecoveryInconsistent";
        case errc::witness_search_failed: return "WitnessSearchFailed";
        case errc::not_planar: return "NotPlanar";
        case errc::not_in_span: return "NotInSpan";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace waring5

#endif
