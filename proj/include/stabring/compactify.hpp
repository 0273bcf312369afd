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

#include "stabring/config.hpp"
#include "stabring/finite_abelian.hpp"
#include "stabring/presentation.hpp"

namespace stabring {

/// Finite abelian group data of a compactified module: the assembled
/// integer relation matrix, its invariant factors (> 1), and the order.
struct FiniteGroupPresentation {
    ZMat relations;
    std::vector<Int> invariant_factors;
    Int order = 1;
};

/// Compactification of M = coker(boundary) onto the torus of length ell:
/// every Laurent entry becomes its regular-representation block on the
/// ell^d monomials, and the cokernel of the assembled integer matrix is
/// the finite group M_ell. Carries the full coordinate system plus the
/// flattening between polynomial vectors and ambient integer vectors.
class CompactifiedModule {
  public:
    CompactifiedModule(const Presentation& p, long ell, const Limits& limits = default_limits());

    const Presentation& presentation() const { return pres_; }
    long ell() const { return ell_; }
    long sites() const { return sites_; }  // ell^d
    int ambient_dim() const { return ambient_; }

    const ZMat& relation_matrix() const { return relations_; }
    const QuotientSystem& quotient() const { return quotient_; }
    const Int& order() const { return quotient_.order(); }
    Int relations_det() const;

    FiniteGroupPresentation group() const;

    /// Flattens a polynomial vector (length n) to Z^{n * ell^d}.
    std::vector<Int> flatten(const std::vector<IntPoly>& v) const;
    std::vector<IntPoly> unflatten(const std::vector<Int>& z) const;

    /// Flatten of x^shift * v, the torus translate.
    std::vector<Int> flatten_translate(const std::vector<IntPoly>& v, const Monomial& shift) const;

    /// All site shifts of the torus, in deterministic mixed-radix order.
    std::vector<Monomial> site_monomials() const;

    FinSubgroup full_group() const;
    FinSubgroup zero_subgroup() const;

    /// Subgroup generated by all torus translates of the given columns.
    FinSubgroup submodule_subgroup(const std::vector<std::vector<IntPoly>>& generators) const;

  private:
    Presentation pres_;
    long ell_;
    long sites_;
    int ambient_;
    ZMat relations_;
    QuotientSystem quotient_;
};

/// compactify: the group of M_ell = M (x) R_ell with its Smith data.
FiniteGroupPresentation compactify(const Presentation& p, long ell, const Limits& limits = default_limits());

/// |M_ell| together with the check against k0^(ell^d); a mismatch would be
/// an internal bug, reported as CountMismatch.
struct CountResult {
    Int order;
    Int expected;
    bool check_passed;
};
CountResult count_elements(const Presentation& p, long ell, const Limits& limits = default_limits());

}  // namespace stabring
