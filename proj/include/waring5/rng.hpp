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

#ifndef WARING5_RNG_HPP
#define WARING5_RNG_HPP

#include <cstdint>
#include <random>

#include "scalar.hpp"

namespace waring5 {

/// Deterministic RNG. mt19937_64 output is pinned by the standard; the
/// bounded draws below avoid std::uniform_int_distribution, whose mapping
/// is implementation-defined, so identical seeds give identical streams on
/// every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi].
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Rational with |numerator| <= h and 1 <= denominator <= h.
    Rational rational(unsigned h, bool nonzero = false) {
        for (;;) {
            long long num = int_in(-static_cast<long long>(h), static_cast<long long>(h));
            long long den = int_in(1, static_cast<long long>(h));
            if (nonzero && num == 0) continue;
            return rational_from(Int(num), Int(den));
        }
    }

    /// Small nonzero integer as a rational, |value| <= h.
    Rational small_int(unsigned h) {
        long long v = int_in(1, static_cast<long long>(h));
        return Rational(below(2) ? v : -v);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace waring5

#endif
