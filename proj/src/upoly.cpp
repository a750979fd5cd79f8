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

#include "waring5/upoly.hpp"

namespace waring5 {

UPoly up_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int up_deg(const UPoly& p) { return int(p.size()) - 1; }

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return up_trim(std::move(r));
}

UPoly up_scale(const UPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) fail(errc::invalid_argument, "univariate division by zero");
    if (a.size() < b.size()) return {{}, a};
    UPoly rem = a, q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (size_t i = a.size() - 1; i + 1 >= b.size(); --i) {
        Rational c = rem[i] / lead;
        q[i - (b.size() - 1)] = c;
        if (!c.is_zero())
            for (size_t j = 0; j < b.size(); ++j) rem[i - (b.size() - 1) + j] -= c * b[j];
        if (i + 1 == b.size()) break;
    }
    rem.resize(b.size() - 1);
    return {up_trim(std::move(q)), up_trim(std::move(rem))};
}

UPoly up_derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(long(i));
    return up_trim(std::move(r));
}

UPoly up_monic(UPoly a) {
    a = up_trim(std::move(a));
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

UPoly up_gcd(UPoly a, UPoly b) {
    a = up_trim(std::move(a));
    b = up_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = up_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(std::move(a));
}

Rational up_eval(const UPoly& a, const Rational& x) {
    Rational acc(0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

bool up_squarefree(const UPoly& p) {
    UPoly q = up_trim(p);
    if (q.empty()) return false;
    if (q.size() == 1) return true;
    return up_deg(up_gcd(q, up_derivative(q))) == 0;
}

UPoly up_from_roots(const std::vector<Rational>& roots) {
    UPoly r{Rational(1)};
    for (const auto& c : roots) r = up_mul(r, UPoly{-c, Rational(1)});
    return r;
}

}  // namespace waring5
