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

#include <optional>
#include <string>
#include <vector>

#include "stabring/ext_charges.hpp"
#include "stabring/linking_form.hpp"

namespace stabring {

/// Submodule of a form's carrier, given by generator columns. The optional
/// square presentation is a caller-supplied certificate that the submodule
/// is a torsion module of homological dimension one.
struct Submodule {
    IntPolyMatrix generators;  // carrier_size x k
    std::optional<Presentation> certificate;

    int generator_count() const { return generators.cols(); }

    std::vector<IntPoly> generator(int j) const {
        std::vector<IntPoly> g(generators.rows(), IntPoly(generators.dim()));
        for (int i = 0; i < generators.rows(); ++i) g[i] = generators.at(i, j);
        return g;
    }

    static Submodule from_columns(const std::vector<std::vector<IntPoly>>& cols, int rows, int dim);
};

/// lambda restricted to the submodule vanishes mod R; sufficient to check
/// on generator pairs by sesquilinearity.
bool is_isotropic(const LinkingForm& form, const Submodule& s);

/// Annihilator of the submodule inside the compactified carrier. n must be
/// annihilating (the carrier exponent divides it).
FinSubgroup annihilator_finite(const LinkingForm& form, const Submodule& s, long ell, const Int& n,
                               const Limits& limits = default_limits());

/// A linking formation (P, lambda; M, F): the form, the reference
/// lagrangian M (the local basis) and the stabilizer module F. Validation
/// checks isotropy of both and certifies M as a lagrangian: exactly at
/// d = 0, via finite compactifications at d >= 1.
class Formation {
  public:
    static Formation validate(LinkingForm form, Submodule m, Submodule f,
                              std::vector<long> ell_checks = {1, 2},
                              const Limits& limits = default_limits());

    const LinkingForm& form() const { return form_; }
    const Submodule& m() const { return m_; }
    const Submodule& f() const { return f_; }
    int dim() const { return form_.dim(); }

    /// Which guarantee the reference lagrangian carries: {0} means the
    /// exact d = 0 decision, otherwise the finite tori that were checked.
    const std::vector<long>& m_certified_on() const { return m_certified_on_; }

    std::optional<Presentation> f_certificate;         // presents F
    std::optional<Presentation> quotient_certificate;  // presents P/F

  private:
    Formation() = default;
    LinkingForm form_;
    Submodule m_, f_;
    std::vector<long> m_certified_on_;
};

struct InvertibilityVerdict {
    enum class Status { CertifiedInvertible, Falsified, PassedFiniteChecks };
    Status status = Status::PassedFiniteChecks;
    std::vector<std::string> evidence;
    // set when falsified: an element of F_perp \ F on the witness torus
    std::optional<std::vector<IntPoly>> witness;
    long witness_ell = 0;
};

/// Verifies isotropy of F, the annihilator condition F_ell^perp = F_ell on
/// every listed torus, topological-charge vanishing at d = 0, and the
/// consistency of any supplied certificates. d = 0 verdicts are exact;
/// d >= 1 verdicts never exceed PassedFiniteChecks.
InvertibilityVerdict invertibility_check(const Formation& fm, const std::vector<long>& ell_list,
                                         std::optional<Int> n = std::nullopt,
                                         const Limits& limits = default_limits());

/// Direct sum of formations; the stacked code.
Formation stack(const Formation& a, const Formation& b);

/// (P; M, F) then (P; F, G) composes to (P; M, G); the discarded summand
/// (P; F, F) is a product code. The middle lagrangians must coincide.
Formation swap_compose(const Formation& a, const Formation& b);

/// Condensation by a sublagrangian K <= F at d = 0: passes to K_perp / K
/// with the induced form and the stated images of M and F. The two side
/// condition variants are separate paths; the error reports which failed.
Formation condense(const Formation& fm, const Submodule& k, const Limits& limits = default_limits());

/// sqrt of |F_ell^perp / F_ell|; the ground-space dimension of the
/// stabilizer Hamiltonian on the ell-torus.
Int degeneracy(const Formation& fm, long ell, const Limits& limits = default_limits());

/// Witt-class level diagnostics of a d = 0 formation: stable under the
/// composition relation when the stabilizers are lagrangians.
struct FormationInvariantsD0 {
    InvertibilityVerdict::Status status;
    Int degeneracy;
    std::vector<Int> defect_factors;  // invariant factors of F_perp / F

    friend bool operator==(const FormationInvariantsD0& a, const FormationInvariantsD0& b) {
        return a.status == b.status && a.degeneracy == b.degeneracy && a.defect_factors == b.defect_factors;
    }
};

FormationInvariantsD0 formation_invariants_d0(const Formation& fm, const Limits& limits = default_limits());

}  // namespace stabring
