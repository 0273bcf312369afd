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

#include "stabring/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace stabring {

namespace {

// Exact division of integer polynomials (ascending coefficients); the
// divisor must be monic up to sign and divide exactly.
std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Int> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw Error("polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < d.size()) throw Error("polynomial division: degree mismatch");
    std::vector<Int> q(num.size() - d.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int lead = num[k + d.size() - 1];
        if (lead % d.back() != 0) throw Error("polynomial division not exact");
        Int coeff = lead / d.back();
        q[k] = coeff;
        for (std::size_t i = 0; i < d.size(); ++i) num[k + i] -= coeff * d[i];
    }
    for (const Int& c : num)
        if (c != 0) throw Error("polynomial division left a remainder");
    return q;
}

std::vector<Int> compute_cyclotomic(long n) {
    // z^n - 1 divided by all proper cyclotomic factors
    std::vector<Int> poly(static_cast<std::size_t>(n) + 1, Int(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = poly_divexact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Int>> cache;
    static std::recursive_mutex mutex;  // compute_cyclotomic recurses on divisors
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, std::vector<Int>{Int(-1), Int(1)}).first->second;
    return cache.emplace(n, compute_cyclotomic(n)).first->second;
}

bool Cyclotomic::is_zero() const {
    // remainder of the coefficient polynomial modulo Phi_n
    std::vector<Int> rem = c_;
    const std::vector<Int>& phi = cyclotomic_polynomial(n_);
    const std::size_t deg = phi.size() - 1;  // phi is monic
    while (rem.size() > deg) {
        Int lead = rem.back();
        if (lead != 0) {
            std::size_t shift = rem.size() - phi.size();
            for (std::size_t i = 0; i < phi.size(); ++i) rem[shift + i] -= lead * phi[i];
        }
        rem.pop_back();
    }
    for (const Int& v : rem)
        if (v != 0) return false;
    return true;
}

double Cyclotomic::real_part() const {
    double acc = 0;
    for (long k = 0; k < n_; ++k) {
        if (c_[k] == 0) continue;
        acc += c_[k].convert_to<double>() * std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n_));
    }
    return acc;
}

double Cyclotomic::imag_part() const {
    double acc = 0;
    for (long k = 0; k < n_; ++k) {
        if (c_[k] == 0) continue;
        acc += c_[k].convert_to<double>() * std::sin(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n_));
    }
    return acc;
}

}  // namespace stabring
