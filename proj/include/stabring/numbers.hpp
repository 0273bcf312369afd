// Copyright 2026 The stabring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "stabring/errors.hpp"

namespace stabring {

// All coefficient arithmetic is exact; no floating point enters the symbolic layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Canonical representative of r mod 1 in [0, 1).
inline Rat mod_one(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    Int rem = n - q * d;
    if (rem < 0) rem += d;
    return Rat(rem, d);
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r = 1;
    for (unsigned long i = 0; i < exp; ++i) r *= base;
    return r;
}

// Floor of the square root; exact.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative number");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)(boost::multiprecision::msb(n) / 2 + 1);
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (is_integer(v)) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

// A rational constrained to the canonical window [0, 1); the value type of
// classes in Q/Z. Products are taken on representatives and renormalized.
struct RatMod1 {
    Rat v;

    RatMod1() : v(0) {}
    explicit RatMod1(const Rat& r) : v(mod_one(r)) {}

    friend RatMod1 operator+(const RatMod1& a, const RatMod1& b) { return RatMod1(a.v + b.v); }
    friend RatMod1 operator-(const RatMod1& a, const RatMod1& b) { return RatMod1(a.v - b.v); }
    friend RatMod1 operator*(const RatMod1& a, const RatMod1& b) { return RatMod1(a.v * b.v); }
    friend RatMod1 operator-(const RatMod1& a) { return RatMod1(-a.v); }
    RatMod1& operator+=(const RatMod1& o) { v = mod_one(v + o.v); return *this; }
    friend bool operator==(const RatMod1& a, const RatMod1& b) { return a.v == b.v; }
    friend bool operator!=(const RatMod1& a, const RatMod1& b) { return a.v != b.v; }
    bool is_zero() const { return v == 0; }
};

inline std::string to_string(const RatMod1& v) { return to_string(v.v); }

}  // namespace stabring
