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

#include "stabring/poly_matrix.hpp"

namespace stabring {

/// A square presentation of a torsion module M = coker(boundary) over the
/// Laurent ring: boundary becomes invertible after inverting the nonzero
/// integers, which for a square matrix means det = (+-monomial) * k0 with
/// k0 a positive integer. k0 is the class of M in the Grothendieck group of
/// such modules. The adjugate is cached because both element equality and
/// the duality pairing reduce to adjugate divisibility.
class Presentation {
  public:
    /// Empty presentation of the zero module in dimension d.
    explicit Presentation(int dim = 0);

    /// Validates the boundary matrix and computes the determinant data.
    /// Throws ZeroDeterminant when det = 0 and NonUnitMonomialFactor when
    /// the determinant has more than one term.
    static Presentation validate(IntPolyMatrix boundary);

    const IntPolyMatrix& boundary() const { return boundary_; }
    int size() const { return boundary_.rows(); }
    int dim() const { return boundary_.dim(); }

    const Int& k0() const { return k0_; }
    const IntPoly& det() const { return det_; }
    const IntPolyMatrix& adjugate() const { return adjugate_; }
    int unit_sign() const { return unit_sign_; }
    const Monomial& unit_monomial() const { return unit_monomial_; }

    /// Conjugate-transpose boundary; presents the S-dual module.
    Presentation s_dual() const;

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.boundary_ == b.boundary_;
    }
    friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

  private:
    IntPolyMatrix boundary_;
    IntPoly det_;
    IntPolyMatrix adjugate_;
    Int k0_ = 1;
    int unit_sign_ = 1;
    Monomial unit_monomial_;
};

/// Element of coker(boundary), stored as a representative vector.
struct ModuleElement {
    Presentation owner;
    std::vector<IntPoly> rep;

    ModuleElement(Presentation owner_, std::vector<IntPoly> rep_);
};

/// Element of the S-dual module, stored over the dual presentation.
struct DualElement {
    Presentation owner;  // the s_dual presentation
    std::vector<IntPoly> rep;

    DualElement(Presentation owner_, std::vector<IntPoly> rep_);
};

/// x = y in coker(boundary)? Decided exactly: x - y lies in the image iff
/// adj(boundary) * (x - y) is divisible by det entrywise, the quotient then
/// being the unique preimage.
bool elements_equal(const ModuleElement& x, const ModuleElement& y);

/// Membership of a raw vector in the image of the boundary.
bool in_image(const Presentation& p, const std::vector<IntPoly>& v);

/// The duality pairing M^dual x M -> S^{-1}R/R, reduced to the canonical
/// mod-1 representative. f must live over the s_dual of x's owner.
RatPoly dual_pairing(const DualElement& f, const ModuleElement& x);

/// Block-diagonal presentation of the direct sum; k0 multiplies.
Presentation direct_sum(const Presentation& a, const Presentation& b);

}  // namespace stabring
