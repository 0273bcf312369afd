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

#include "stabring/presentation.hpp"

namespace stabring {

Presentation::Presentation(int dim)
    : boundary_(0, 0, dim),
      det_(IntPoly::constant(dim, 1)),
      adjugate_(0, 0, dim),
      unit_monomial_(Monomial::one(dim)) {}

Presentation Presentation::validate(IntPolyMatrix boundary) {
    if (boundary.rows() != boundary.cols()) throw DimensionMismatch("presentation boundary must be square");
    Presentation p(boundary.dim());
    auto [det, adj] = poly_det_adjugate(boundary);
    if (det.is_zero()) throw ZeroDeterminant("boundary is singular over the localized ring");
    if (!det.is_single_term())
        throw NonUnitMonomialFactor("det = " + det.str());
    const auto& [mono, coeff] = *det.terms().begin();
    p.boundary_ = std::move(boundary);
    p.det_ = det;
    p.adjugate_ = std::move(adj);
    p.unit_sign_ = coeff < 0 ? -1 : 1;
    p.k0_ = coeff < 0 ? Int(-coeff) : coeff;
    p.unit_monomial_ = mono;
    return p;
}

Presentation Presentation::s_dual() const {
    Presentation dual(dim());
    if (size() == 0) return dual;
    return validate(boundary_.conjugate_transpose());
}

ModuleElement::ModuleElement(Presentation owner_, std::vector<IntPoly> rep_)
    : owner(std::move(owner_)), rep(std::move(rep_)) {
    if (static_cast<int>(rep.size()) != owner.size()) throw DimensionMismatch("module element length");
    for (const auto& e : rep)
        if (e.dim() != owner.dim()) throw DimensionMismatch("module element entry dimension");
}

DualElement::DualElement(Presentation owner_, std::vector<IntPoly> rep_)
    : owner(std::move(owner_)), rep(std::move(rep_)) {
    if (static_cast<int>(rep.size()) != owner.size()) throw DimensionMismatch("dual element length");
    for (const auto& e : rep)
        if (e.dim() != owner.dim()) throw DimensionMismatch("dual element entry dimension");
}

bool in_image(const Presentation& p, const std::vector<IntPoly>& v) {
    if (static_cast<int>(v.size()) != p.size()) throw DimensionMismatch("in_image vector length");
    std::vector<IntPoly> w = p.adjugate().apply(v);
    // divisibility by det = sign * k0 * x^alpha is divisibility of every
    // coefficient by k0; the monomial is a unit.
    for (const auto& entry : w)
        for (const auto& [m, c] : entry.terms())
            if (c % p.k0() != 0) return false;
    return true;
}

bool elements_equal(const ModuleElement& x, const ModuleElement& y) {
    if (x.owner != y.owner) throw OwnerMismatch("elements_equal");
    std::vector<IntPoly> diff(x.rep.size(), IntPoly(x.owner.dim()));
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.rep[i] - y.rep[i];
    return in_image(x.owner, diff);
}

RatPoly dual_pairing(const DualElement& f, const ModuleElement& x) {
    if (f.owner != x.owner.s_dual()) throw OwnerMismatch("dual_pairing: f must live over the s_dual presentation");
    const Presentation& p = x.owner;
    const int d = p.dim();
    std::vector<IntPoly> y = p.adjugate().apply(x.rep);
    IntPoly numerator(d);
    for (int i = 0; i < p.size(); ++i) numerator += f.rep[i].involution() * y[i];
    // divide by det = sign * k0 * x^alpha over the rationals
    RatPoly value(d);
    Monomial shift = p.unit_monomial().inverse();
    Rat scale = Rat(p.unit_sign(), p.k0());
    for (const auto& [m, c] : numerator.terms()) value.add_term(m * shift, Rat(c) * scale);
    return normalize_mod_one(value);
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("direct_sum of presentations");
    int n = a.size() + b.size();
    IntPolyMatrix block(n, n, a.dim());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) block.at(i, j) = a.boundary().at(i, j);
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) block.at(a.size() + i, a.size() + j) = b.boundary().at(i, j);
    return Presentation::validate(std::move(block));
}

}  // namespace stabring
