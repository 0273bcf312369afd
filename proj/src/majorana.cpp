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

#include "stabring/majorana.hpp"

#include <set>

namespace stabring {

MajoranaString MajoranaString::chi(int n, int index) {
    if (index < 0 || index >= 2 * n) throw Error("majorana index out of range");
    MajoranaString s = identity(n);
    s.bits[index] = 1;
    return s;
}

MajoranaString MajoranaString::from_bits(const std::vector<std::uint8_t>& bits, int phase) {
    if (bits.size() % 2 != 0) throw DimensionMismatch("majorana string length must be even");
    MajoranaString s;
    s.bits = bits;
    for (auto& b : s.bits) b = b ? 1 : 0;
    s.phase = ((phase % 8) + 8) % 8;
    return s;
}

MajoranaString majorana_mul(const MajoranaString& a, const MajoranaString& b) {
    if (a.bits.size() != b.bits.size()) throw DimensionMismatch("majorana string lengths");
    const int len = static_cast<int>(a.bits.size());
    // each factor of b moves left past the tail of a with higher index
    long swaps = 0;
    int tail = 0;  // set bits of a strictly above the current b index
    for (int i = len - 1; i >= 0; --i) {
        if (b.bits[i]) swaps += tail;
        if (a.bits[i]) ++tail;
    }
    MajoranaString r;
    r.bits.resize(len);
    for (int i = 0; i < len; ++i) r.bits[i] = a.bits[i] ^ b.bits[i];
    r.phase = (a.phase + b.phase + static_cast<int>(swaps % 2) * 4) % 8;
    return r;
}

Rat kappa(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    if (x.size() != y.size()) throw DimensionMismatch("kappa argument lengths");
    long wx = 0, wy = 0, dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        wx += x[i];
        wy += y[i];
        dot += x[i] & y[i];
    }
    return mod_one(Rat(wx * wy - dot, 2));
}

Rat OddFormF2::b_hat(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) const {
    if (static_cast<int>(x.size()) != 2 * n || static_cast<int>(y.size()) != 2 * n)
        throw DimensionMismatch("odd form argument lengths");
    // block matrix (0 1/2; 1/2 1/2) per pair (2k, 2k+1)
    long twice = 0;
    for (int k = 0; k < n; ++k) {
        twice += x[2 * k] * y[2 * k + 1];
        twice += x[2 * k + 1] * y[2 * k];
        twice += x[2 * k + 1] * y[2 * k + 1];
    }
    return mod_one(Rat(twice, 2));
}

std::vector<std::uint8_t> OddFormF2::c_hat() const {
    std::vector<std::uint8_t> c(2 * n, 0);
    for (int k = 0; k < n; ++k) c[2 * k] = 1;
    return c;
}

std::vector<std::uint8_t> OddFormF2::phi(const std::vector<std::uint8_t>& x) const {
    if (static_cast<int>(x.size()) != 2 * n) throw DimensionMismatch("odd form argument length");
    std::vector<std::uint8_t> r(2 * n);
    for (int k = 0; k < n; ++k) {
        r[2 * k] = x[2 * k + 1];
        r[2 * k + 1] = x[2 * k] ^ x[2 * k + 1];
    }
    return r;
}

Rat OddFormF2::modified_commutator(const std::vector<std::uint8_t>& x,
                                   const std::vector<std::uint8_t>& y) const {
    int wy = 0;
    for (auto b : y) wy += b;
    std::vector<std::uint8_t> shifted = phi(y);
    if (wy % 2 != 0) {
        std::vector<std::uint8_t> c = c_hat();
        for (int i = 0; i < 2 * n; ++i) shifted[i] ^= c[i];
    }
    return b_hat(phi(x), shifted);
}

Rat OddFormF2::parity(const std::vector<std::uint8_t>& x) const {
    std::vector<std::uint8_t> px = phi(x);
    return b_hat(px, px);
}

MajoranaCodeReport is_majorana_code(const std::vector<std::vector<std::uint8_t>>& generators) {
    MajoranaCodeReport report;
    if (generators.empty()) {
        report.valid = true;
        return report;
    }
    const std::size_t len = generators[0].size();
    for (const auto& g : generators)
        if (g.size() != len) throw DimensionMismatch("majorana code generator lengths");

    // close the subgroup; kappa is biadditive and parity a homomorphism, so
    // generator checks suffice, but the generated set keeps the report
    // exhaustive
    std::set<std::vector<std::uint8_t>> group;
    group.insert(std::vector<std::uint8_t>(len, 0));
    for (const auto& g : generators) {
        std::vector<std::vector<std::uint8_t>> snapshot(group.begin(), group.end());
        for (const auto& h : snapshot) {
            std::vector<std::uint8_t> sum = h;
            for (std::size_t i = 0; i < len; ++i) sum[i] ^= g[i];
            group.insert(sum);
        }
    }
    for (const auto& x : group) {
        long w = 0;
        for (auto b : x) w += b;
        if (w % 2 != 0) {
            report.reason = "element of odd parity";
            return report;
        }
        for (const auto& y : group)
            if (kappa(x, y) != 0) {
                report.reason = "anticommuting pair";
                return report;
            }
    }
    report.valid = true;
    return report;
}

}  // namespace stabring
