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

#include <vector>

#include "stabring/numbers.hpp"

namespace stabring {

/// Exact arithmetic in Z[zeta_n], zeta_n = e^{2 pi i / n}. Elements are
/// integer coefficient vectors over zeta^0 .. zeta^{n-1}; products convolve
/// cyclically, and zero tests reduce modulo the n-th cyclotomic polynomial.
class Cyclotomic {
  public:
    explicit Cyclotomic(long n) : n_(n), c_(static_cast<std::size_t>(n), Int(0)) {
        if (n <= 0) throw Error("cyclotomic order must be positive");
    }

    static Cyclotomic root_power(long n, long k) {
        Cyclotomic z(n);
        k %= n;
        if (k < 0) k += n;
        z.c_[static_cast<std::size_t>(k)] = 1;
        return z;
    }

    static Cyclotomic integer(long n, const Int& v) {
        Cyclotomic z(n);
        z.c_[0] = v;
        return z;
    }

    long order() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }

    void add_root_power(long k, const Int& count = Int(1)) {
        k %= n_;
        if (k < 0) k += n_;
        c_[static_cast<std::size_t>(k)] += count;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        Cyclotomic r = a;
        for (long k = 0; k < a.n_; ++k) r.c_[k] += b.c_[k];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        Cyclotomic r = a;
        for (long k = 0; k < a.n_; ++k) r.c_[k] -= b.c_[k];
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        Cyclotomic r(a.n_);
        for (long i = 0; i < a.n_; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < a.n_; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[(i + j) % a.n_] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend Cyclotomic operator*(const Int& s, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// Complex conjugate: zeta^k -> zeta^{n-k}.
    Cyclotomic conj() const {
        Cyclotomic r(n_);
        for (long k = 0; k < n_; ++k) r.c_[(n_ - k) % n_] += c_[k];
        return r;
    }

    bool is_zero() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        return (a - b).is_zero();
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Numeric embedding; rigorous for sign decisions because coefficient
    /// magnitudes bound the rounding error far below 1.
    double real_part() const;
    double imag_part() const;

  private:
    void check(const Cyclotomic& o) const {
        if (n_ != o.n_) throw DimensionMismatch("cyclotomic orders differ");
    }

    long n_;
    std::vector<Int> c_;
};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
const std::vector<Int>& cyclotomic_polynomial(long n);

}  // namespace stabring
