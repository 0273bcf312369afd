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

#include "stabring/compactify.hpp"
#include "stabring/presentation.hpp"

namespace stabring {

/// A value of the linking pairing: a class in S^{-1}R/R held by its
/// canonical representative with all coefficients in [0, 1).
class PairingValue {
  public:
    PairingValue() = default;
    explicit PairingValue(const RatPoly& raw) : value_(normalize_mod_one(raw)) {}

    const RatPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    RatMod1 trace() const { return RatMod1(value_.trace()); }

    friend bool operator==(const PairingValue& a, const PairingValue& b) { return a.value_ == b.value_; }
    friend bool operator!=(const PairingValue& a, const PairingValue& b) { return !(a == b); }

  private:
    RatPoly value_;
};

/// An epsilon-hermitian linking form on P = coker(boundary): the pairing is
/// lambda(x, y) = involution(x)^T * gram * y mod R on representative
/// vectors. Construction validates descent to the cokernel (gram * boundary
/// and conj-transpose(boundary) * gram integral) and hermiticity
/// (conj-transpose(gram) = eps * gram modulo integral matrices).
class LinkingForm {
  public:
    /// The empty form; meaningful instances come from validate().
    LinkingForm() = default;

    static LinkingForm validate(Presentation carrier, RatPolyMatrix gram, int epsilon);

    const Presentation& carrier() const { return carrier_; }
    const RatPolyMatrix& gram() const { return gram_; }
    int epsilon() const { return epsilon_; }
    int dim() const { return carrier_.dim(); }
    int size() const { return carrier_.size(); }

    /// Exact rational lift of the pairing on representative vectors.
    RatPoly pairing_lift(const std::vector<IntPoly>& x, const std::vector<IntPoly>& y) const;

    PairingValue eval_vectors(const std::vector<IntPoly>& x, const std::vector<IntPoly>& y) const;
    PairingValue eval(const ModuleElement& x, const ModuleElement& y) const;

    /// tr of the pairing; the commutator of the corresponding operators is
    /// e^{2 pi i * result}.
    RatMod1 commutator_phase(const ModuleElement& x, const ModuleElement& y) const;

    /// True when conj-transpose(gram) equals eps * gram on the nose, not
    /// just modulo integral matrices. The operator layer requires this.
    bool exactly_hermitian() const;

    friend bool operator==(const LinkingForm& a, const LinkingForm& b) {
        return a.epsilon_ == b.epsilon_ && a.carrier_ == b.carrier_ && a.gram_ == b.gram_;
    }
    friend bool operator!=(const LinkingForm& a, const LinkingForm& b) { return !(a == b); }

  private:
    Presentation carrier_;
    RatPolyMatrix gram_;
    int epsilon_ = -1;
};

LinkingForm validate_form(Presentation carrier, RatPolyMatrix gram, int epsilon);

/// The standard form H^eps(M) on M + M^dual, with the off-diagonal blocks
/// implementing the evaluation pairing through the adjugate.
LinkingForm standard_form(const Presentation& m, int epsilon);

/// Block-diagonal sum of forms with equal d and epsilon.
LinkingForm orthogonal_sum(const LinkingForm& a, const LinkingForm& b);

/// Membership of a pairing class in Q^eps(R,S) = {b | b - eps*conj(b) =
/// a - eps*conj(a), a in R}/R. For eps = -1 this asks b + conj(b) to be
/// integral with even constant coefficient; for eps = +1, b - conj(b)
/// integral.
bool in_q_epsilon(const RatPoly& value, int epsilon);

/// Evenness of the form over a generating set: every generator and every
/// pairwise sum has diagonal value in Q^eps.
bool is_even(const LinkingForm& form, const std::vector<std::vector<IntPoly>>& generators);
bool is_even(const LinkingForm& form);  // standard basis generators

struct NonsingularResult {
    enum class Status { CertifiedD0, FalsifiedAt, PassedFiniteChecks } status;
    long ell = 0;  // set for FalsifiedAt

    bool ok() const { return status != Status::FalsifiedAt; }
};

/// d = 0: exact decision through the finite carrier group. d >= 1: checks
/// that the induced pairing on each listed compactification has trivial
/// radical; passing is evidence, not proof.
NonsingularResult nonsingular_check(const LinkingForm& form, const std::vector<long>& ell_list,
                                    const Limits& limits = default_limits());

/// Pairing of a form transported to a finite torus: exact rational lifts of
/// tr lambda on flattened vectors, plus annihilator computations used by
/// the formation layer.
class CompactPairing {
  public:
    CompactPairing(const LinkingForm& form, long ell, const Limits& limits = default_limits());

    const LinkingForm& form() const { return form_; }
    const CompactifiedModule& module() const { return module_; }

    /// Exponent of the finite carrier (1 for the trivial group).
    const Int& exponent() const { return exponent_; }

    /// Honest rational value of tr lambda on ambient integer vectors; the
    /// phase lift used by the Weyl layer.
    Rat lift(const std::vector<Int>& z1, const std::vector<Int>& z2) const;

    RatMod1 phase(const std::vector<Int>& z1, const std::vector<Int>& z2) const {
        return RatMod1(lift(z1, z2));
    }

    /// Subgroup of all z with phase(g, z) = 0 for every generator column g.
    FinSubgroup annihilator(const ZMat& generator_columns) const;

    /// Radical of the induced pairing.
    FinSubgroup radical() const;

  private:
    LinkingForm form_;
    CompactifiedModule module_;
    Int exponent_ = 1;
};

}  // namespace stabring
