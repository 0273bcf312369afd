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

#include <cstdint>
#include <string>
#include <vector>

#include "stabring/numbers.hpp"

namespace stabring {

/// A Majorana string: the normal-ordered product chi_1^{x_1} ... chi_{2n}^{x_{2n}}
/// times an eighth root of unity e^{2 pi i phase/8}. Ascending-index normal
/// order is the fixed convention; signs from anticommutation land in the
/// phase.
struct MajoranaString {
    std::vector<std::uint8_t> bits;  // length 2n over Z/2
    int phase = 0;                   // exponent of e^{2 pi i / 8}, canonical in [0, 8)

    int n() const { return static_cast<int>(bits.size() / 2); }
    int weight() const {
        int w = 0;
        for (auto b : bits) w += b;
        return w;
    }

    static MajoranaString identity(int n) { return MajoranaString{std::vector<std::uint8_t>(2 * n, 0), 0}; }
    static MajoranaString chi(int n, int index);  // single generator, 0-based
    static MajoranaString from_bits(const std::vector<std::uint8_t>& bits, int phase = 0);

    friend bool operator==(const MajoranaString& a, const MajoranaString& b) {
        return a.bits == b.bits && a.phase == b.phase;
    }
};

/// Normal-ordered product with sign tracking from chi_i chi_j = -chi_j chi_i
/// (i != j) and chi_i^2 = 1.
MajoranaString majorana_mul(const MajoranaString& a, const MajoranaString& b);

/// kappa(x, y) = x^T K y mod 1 with K the all-half off-diagonal matrix; the
/// commutator of the strings is e^{2 pi i kappa}.
Rat kappa(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

/// The odd form nF_2 on (Z/2)^{2n}: blocks (0 1/2; 1/2 1/2) and the
/// distinguished element c_hat = e_1 + e_3 + ... + e_{2n-1} representing
/// the parity homomorphism c(z) = b(z, z).
///
/// Majorana strings are matched to form coordinates blockwise through
/// (a, b) -> (b, a+b), under which b(phi(x), phi(x)) is the string parity
/// and the graded commutation rule
///     kappa(x, y) = b(phi(x), phi(y) - |y| c_hat),   |y| = parity bit,
/// holds identically: both sides are biadditive mod 1 and agree on basis
/// pairs. The c_hat shift applies only against odd strings; shifting
/// unconditionally is inconsistent for mixed parities (swapping x and y
/// twice would pick up a leftover sign e^{2 pi i (c(x)+c(y))}).
struct OddFormF2 {
    int n = 1;

    explicit OddFormF2(int n_) : n(n_) {
        if (n_ <= 0) throw Error("odd form needs at least one block");
    }

    Rat b_hat(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) const;
    std::vector<std::uint8_t> c_hat() const;

    /// Blockwise string-to-form identification (a, b) -> (b, a+b).
    std::vector<std::uint8_t> phi(const std::vector<std::uint8_t>& x) const;

    /// The graded commutator exponent above; coincides with kappa on all
    /// pairs of strings.
    Rat modified_commutator(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) const;

    /// c(phi(x)) = b(phi(x), phi(x)): 0 for even strings, 1/2 for odd; a
    /// homomorphism equal to (x_1 + ... + x_2n)/2 mod 1.
    Rat parity(const std::vector<std::uint8_t>& x) const;
};

struct MajoranaCodeReport {
    bool valid = false;
    std::string reason;  // set when invalid
};

/// A commuting subgroup of even-parity strings: all pairwise kappa vanish
/// and every generated element has parity zero.
MajoranaCodeReport is_majorana_code(const std::vector<std::vector<std::uint8_t>>& generators);

}  // namespace stabring
