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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabring/config.hpp"
#include "stabring/finite_abelian.hpp"

namespace stabring {

/// Quadratic form q on a finite abelian group, presented on cyclic
/// generators: q(sum x_i e_i) = sum x_i^2 q_i + sum_{i<j} x_i x_j b_ij,
/// all mod 1, where b is the associated symmetric linking form with
/// b(x, y) = q(x+y) - q(x) - q(y) and b_ii = 2 q_i.
class FiniteQuadraticForm {
  public:
    /// orders: cyclic orders of the generators; q_diag: q(e_i); b_offdiag:
    /// full symmetric matrix or empty for the diagonal form.
    static FiniteQuadraticForm create(std::vector<Int> orders, std::vector<Rat> q_diag,
                                      std::vector<std::vector<Rat>> b = {});

    static FiniteQuadraticForm hyperbolic(const Int& m);

    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<Int>& orders() const { return orders_; }
    const Int& order() const { return order_; }
    const Int& exponent() const { return exponent_; }

    Rat q_of(const std::vector<Int>& x) const;
    Rat b_of(const std::vector<Int>& x, const std::vector<Int>& y) const;
    Rat q_gen(int i) const { return q_diag_[i]; }
    Rat b_gen(int i, int j) const { return b_[i][j]; }

    FiniteQuadraticForm negate() const;

    bool nondegenerate(const Limits& limits = default_limits()) const;

    /// Deterministic enumeration of all elements in mixed-radix order.
    void for_each_element(const std::function<void(const std::vector<Int>&)>& fn) const;

    friend FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

  private:
    std::vector<Int> orders_;
    std::vector<Rat> q_diag_;
    std::vector<std::vector<Rat>> b_;
    Int order_ = 1;
    Int exponent_ = 1;
};

struct GaussMilgramResult {
    int sigma = 0;           // mod 8
    bool magnitude_ok = false;  // |G|^2 = |D| verified in exact cyclotomic arithmetic
};

/// Gauss sum G = sum_x e^{2 pi i q(x)} by exact enumeration; asserts
/// |G| = sqrt|D| and returns sigma with G = sqrt|D| e^{2 pi i sigma / 8}.
/// Throws DegenerateForm when the magnitude law fails.
GaussMilgramResult gauss_milgram(const FiniteQuadraticForm& q, const Limits& limits = default_limits());

/// Exhaustive search for a subgroup of order sqrt|D| on which q vanishes.
/// None immediately when |D| is not a perfect square. Returns generators.
std::optional<std::vector<std::vector<Int>>> find_lagrangian(const FiniteQuadraticForm& q,
                                                             const Limits& limits = default_limits());

struct WittInvariants {
    int sigma = 0;
    Int group_order = 1;
    // per prime: order of the p-primary component and its Gauss phase
    std::map<Int, std::pair<Int, int>> per_prime;

    friend bool operator==(const WittInvariants& a, const WittInvariants& b) {
        return a.sigma == b.sigma && a.group_order == b.group_order && a.per_prime == b.per_prime;
    }
};

WittInvariants witt_invariants(const FiniteQuadraticForm& q, const Limits& limits = default_limits());

/// p-primary component of the form.
FiniteQuadraticForm primary_component(const FiniteQuadraticForm& q, const Int& p);

enum class WittComparison { Equivalent, InequivalentInvariantMismatch, Undecided };

/// Decides Witt equivalence up to the implemented invariants plus bounded
/// stabilization: q1 + (-q2) is searched for a lagrangian directly and
/// after adding up to two hyperbolic summands.
WittComparison witt_compare(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                            const Limits& limits = default_limits());

/// The classification answer for spatial dimension d, with the W^pt
/// expansion spelled out per prime class.
struct EdEntry {
    long d = 0;
    std::string group;      // "0", "Z/2", or "W^pt"
    std::string expansion;  // nonempty for W^pt
};

EdEntry e_d_table(long d);

}  // namespace stabring
