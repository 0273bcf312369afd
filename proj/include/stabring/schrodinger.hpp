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

#include <Eigen/Dense>

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "stabring/formation.hpp"
#include "stabring/weyl.hpp"

namespace stabring {

/// Explicit unitary representation of the Weyl operators on l^2(M^dual)
/// for a compactified carrier split as (diagonal block) + (shift block):
/// the reference lagrangian M spans the first block, the boundary is
/// block-diagonal across the split, and the gram vanishes on both diagonal
/// blocks. Under those conditions the operators
///
///   W(u, v) = e^{-i pi tau(u, v)} D(u) S(v),
///   D(u)|b> = e^{2 pi i tau(u, b_rep)}|b>,   S(v)|b> = |b + v>,
///
/// with tau the exact rational pairing lift between the blocks, satisfy
/// the Weyl relation exactly at the lift level. The basis labels are the
/// classes of the shift block; their representatives play the role of the
/// section, and an optional diagonal twist realizes a change of section.
class SchrodingerRep {
  public:
    SchrodingerRep(const LinkingForm& form, long ell, const Submodule& lagrangian,
                   const Limits& limits = default_limits());

    long dim() const { return dim_; }
    const WeylAlgebra& algebra() const { return algebra_; }
    int split() const { return split_; }  // ambient size of the diagonal block

    Eigen::MatrixXcd matrix(const WeylElement& w) const;

    /// Representative (section) vectors of the basis classes, in the shift
    /// block's ambient coordinates.
    const std::vector<std::vector<Int>>& basis_reps() const { return basis_reps_; }

    /// Diagonal unitary implementing a change of section by the lagrangian
    /// shifts v(b); conjugation by it leaves commutators invariant.
    Eigen::MatrixXcd section_twist(const std::vector<std::vector<Int>>& shifts) const;

  private:
    Rat tau(const std::vector<Int>& u, const std::vector<Int>& v_shift_block) const;

    WeylAlgebra algebra_;
    int split_ = 0;             // first block size in ambient coordinates
    QuotientSystem shift_classes_;
    long dim_ = 0;
    std::vector<std::vector<Int>> basis_reps_;

    // phase-free operators cached by vector; matrix() scales by the phase
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<Int>, Eigen::MatrixXcd> cache_;
};

/// Stabilizer Hamiltonian H = -sum_j (W_j + W_j*) assembled from all torus
/// translates of the stabilizer generators. Terms are verified to commute
/// symbolically before any matrix is built.
struct HamiltonianTerms {
    std::vector<WeylElement> terms;
    Eigen::MatrixXcd matrix;  // the assembled Hermitian H
};

HamiltonianTerms build_hamiltonian(const Formation& fm, long ell, const SchrodingerRep& rep);

/// Ground space of H: the simultaneous top eigenspace of every term's
/// hermitian part, computed from products of spectral projectors with
/// eigenvalue clustering tolerance 1e-10.
struct GroundSpace {
    long dimension = 0;
    Eigen::MatrixXcd projector;
    bool frustration_free = false;
};

GroundSpace ground_space(const std::vector<WeylElement>& terms, const SchrodingerRep& rep);

/// Separator / flipper verification per the locally flippable separator
/// notion: mutual commutation, joint spectrum separation, flip relations
/// [Z_i, X_j] = e^{2 pi i / q} delta_ij.
struct SeparatorReport {
    bool commuting = false;
    bool separating = false;
    bool flips_ok = false;
    double max_residual = 0.0;
};

SeparatorReport verify_lfs(const SchrodingerRep& rep, const std::vector<WeylElement>& separators,
                           const std::vector<WeylElement>& flippers, long q, double tol = 1e-10);

}  // namespace stabring
