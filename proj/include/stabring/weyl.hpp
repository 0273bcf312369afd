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

#include "stabring/linking_form.hpp"

namespace stabring {

/// Canonical representative of a phase exponent t (operator = e^{i pi t})
/// in [0, 2).
inline Rat mod_two(const Rat& t) {
    Rat half = mod_one(t / 2);
    return half * 2;
}

/// The compactified carrier together with the exact rational lift of the
/// pairing; the algebra the Weyl operators are defined over. The gram must
/// be epsilon-hermitian on the nose so that the lifted pairing is exactly
/// (anti)symmetric, which the operator phases rely on.
class WeylAlgebra {
  public:
    WeylAlgebra(const LinkingForm& form, long ell, const Limits& limits = default_limits())
        : pairing_(form, ell, limits) {
        if (!form.exactly_hermitian())
            throw Error("weyl algebra needs an exactly hermitian gram lift");
    }

    const CompactPairing& pairing() const { return pairing_; }
    const CompactifiedModule& module() const { return pairing_.module(); }
    const LinkingForm& form() const { return pairing_.form(); }

    Rat lift(const std::vector<Int>& z1, const std::vector<Int>& z2) const {
        return pairing_.lift(z1, z2);
    }

  private:
    CompactPairing pairing_;
};

/// Symbolic Weyl operator e^{i pi phase} W(vec). The vector is an honest
/// integer lift of a carrier element; products add vectors without
/// re-normalizing, so the relation
///   W(p1) W(p2) = e^{i pi tr lambda(p1, p2)} W(p1 + p2)
/// holds exactly at the lift level. Reducing a vector to the canonical
/// group representative changes the operator by a convention-dependent
/// sign, which weyl_canonical exposes explicitly.
struct WeylElement {
    Rat phase;  // exponent t in e^{i pi t}, canonical in [0, 2)
    std::vector<Int> vec;
};

inline WeylElement make_weyl(const WeylAlgebra& alg, const std::vector<IntPoly>& v,
                             const Rat& phase = Rat(0)) {
    return WeylElement{mod_two(phase), alg.module().flatten(v)};
}

inline WeylElement make_weyl_translate(const WeylAlgebra& alg, const std::vector<IntPoly>& v,
                                       const Monomial& shift, const Rat& phase = Rat(0)) {
    return WeylElement{mod_two(phase), alg.module().flatten_translate(v, shift)};
}

inline WeylElement weyl_mul(const WeylAlgebra& alg, const WeylElement& a, const WeylElement& b) {
    if (a.vec.size() != b.vec.size()) throw DimensionMismatch("weyl product carriers");
    WeylElement r;
    r.phase = mod_two(a.phase + b.phase + alg.lift(a.vec, b.vec));
    r.vec.resize(a.vec.size());
    for (std::size_t i = 0; i < a.vec.size(); ++i) r.vec[i] = a.vec[i] + b.vec[i];
    return r;
}

/// W(p)* = W(-p); the phase exponent negates.
inline WeylElement weyl_adjoint(const WeylElement& a) {
    WeylElement r;
    r.phase = mod_two(-a.phase);
    r.vec.resize(a.vec.size());
    for (std::size_t i = 0; i < a.vec.size(); ++i) r.vec[i] = -a.vec[i];
    return r;
}

/// Group commutator exponent: [W(p1), W(p2)] = e^{2 pi i result}.
inline RatMod1 weyl_commutator(const WeylAlgebra& alg, const WeylElement& a, const WeylElement& b) {
    return RatMod1(alg.lift(a.vec, b.vec));
}

/// The group-level normal form: the same phase exponent over the canonical
/// representative of the vector's class. Operators built from different
/// lifts of one class differ by convention-dependent signs, so this is a
/// labeling normal form, not an operator identity; commutators and spectra
/// do not depend on the choice.
inline WeylElement weyl_canonical(const WeylAlgebra& alg, const WeylElement& a) {
    return WeylElement{a.phase, alg.module().quotient().canonical(a.vec)};
}

}  // namespace stabring
