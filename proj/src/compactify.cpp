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

#include "stabring/compactify.hpp"

namespace stabring {

namespace {

// Mixed-radix index of a reduced exponent vector in [0, ell)^d.
long site_index(const Monomial& m, long ell) {
    long idx = 0;
    for (int k = m.dim() - 1; k >= 0; --k) idx = idx * ell + m.exps[k];
    return idx;
}

}  // namespace

CompactifiedModule::CompactifiedModule(const Presentation& p, long ell, const Limits& limits)
    : pres_(p), ell_(ell) {
    if (ell <= 0) throw Error("torus length must be positive");
    sites_ = 1;
    for (int k = 0; k < p.dim(); ++k) {
        sites_ *= ell;
        if (sites_ > limits.max_compact_rows) throw ResourceCap("torus site count");
    }
    long n = p.size();
    if (n * sites_ > limits.max_compact_rows)
        throw ResourceCap("compactified matrix side " + std::to_string(n * sites_));
    ambient_ = static_cast<int>(n * sites_);

    relations_ = ZMat(ambient_, ambient_);
    for (int bi = 0; bi < p.size(); ++bi)
        for (int bj = 0; bj < p.size(); ++bj) {
            IntPoly entry = reduce_mod_torus_poly(p.boundary().at(bi, bj), ell_);
            // regular representation: multiplication by the entry sends the
            // basis monomial at site c to the sites shifted by its terms
            for (const auto& [m, coeff] : entry.terms()) {
                for (long c = 0; c < sites_; ++c) {
                    Monomial site = Monomial::one(p.dim());
                    long rest = c;
                    for (int k = 0; k < p.dim(); ++k) {
                        site.exps[k] = rest % ell_;
                        rest /= ell_;
                    }
                    long r = site_index(detail::reduce_monomial(m * site, ell_), ell_);
                    relations_.at(static_cast<int>(bi * sites_ + r), static_cast<int>(bj * sites_ + c)) += coeff;
                }
            }
        }
    quotient_ = QuotientSystem(relations_);
}

Int CompactifiedModule::relations_det() const {
    Int d = 1;
    for (const Int& f : quotient_.factors()) d *= f;
    // the quotient order equals |det| of the full-rank relation matrix
    return d;
}

FiniteGroupPresentation CompactifiedModule::group() const {
    FiniteGroupPresentation g;
    g.relations = relations_;
    g.invariant_factors = quotient_.factors();
    g.order = quotient_.order();
    return g;
}

std::vector<Int> CompactifiedModule::flatten(const std::vector<IntPoly>& v) const {
    return flatten_translate(v, Monomial::one(pres_.dim()));
}

std::vector<Int> CompactifiedModule::flatten_translate(const std::vector<IntPoly>& v,
                                                       const Monomial& shift) const {
    if (static_cast<int>(v.size()) != pres_.size()) throw DimensionMismatch("flatten vector length");
    std::vector<Int> z(ambient_, Int(0));
    for (int i = 0; i < pres_.size(); ++i) {
        IntPoly reduced = reduce_mod_torus_poly(IntPoly::term(shift, Int(1)) * v[i], ell_);
        for (const auto& [m, c] : reduced.terms()) z[i * sites_ + site_index(m, ell_)] += c;
    }
    return z;
}

std::vector<IntPoly> CompactifiedModule::unflatten(const std::vector<Int>& z) const {
    if (static_cast<int>(z.size()) != ambient_) throw DimensionMismatch("unflatten vector length");
    std::vector<IntPoly> v(pres_.size(), IntPoly(pres_.dim()));
    for (int i = 0; i < pres_.size(); ++i)
        for (long c = 0; c < sites_; ++c) {
            if (z[i * sites_ + c] == 0) continue;
            Monomial site = Monomial::one(pres_.dim());
            long rest = c;
            for (int k = 0; k < pres_.dim(); ++k) {
                site.exps[k] = rest % ell_;
                rest /= ell_;
            }
            v[i].add_term(site, z[i * sites_ + c]);
        }
    return v;
}

std::vector<Monomial> CompactifiedModule::site_monomials() const {
    std::vector<Monomial> sites;
    sites.reserve(sites_);
    for (long c = 0; c < sites_; ++c) {
        Monomial site = Monomial::one(pres_.dim());
        long rest = c;
        for (int k = 0; k < pres_.dim(); ++k) {
            site.exps[k] = rest % ell_;
            rest /= ell_;
        }
        sites.push_back(site);
    }
    return sites;
}

FinSubgroup CompactifiedModule::full_group() const {
    return FinSubgroup(ZMat::identity(ambient_), relations_);
}

FinSubgroup CompactifiedModule::zero_subgroup() const {
    return FinSubgroup(ZMat(ambient_, 0), relations_);
}

FinSubgroup CompactifiedModule::submodule_subgroup(const std::vector<std::vector<IntPoly>>& generators) const {
    std::vector<std::vector<Int>> cols;
    for (const auto& g : generators)
        for (const Monomial& site : site_monomials()) cols.push_back(flatten_translate(g, site));
    return FinSubgroup(ZMat::from_columns(cols, ambient_), relations_);
}

FiniteGroupPresentation compactify(const Presentation& p, long ell, const Limits& limits) {
    return CompactifiedModule(p, ell, limits).group();
}

CountResult count_elements(const Presentation& p, long ell, const Limits& limits) {
    CompactifiedModule c(p, ell, limits);
    CountResult r;
    r.order = c.order();
    r.expected = pow_int(p.k0(), static_cast<unsigned long>(c.sites()));
    r.check_passed = (r.order == r.expected);
    if (!r.check_passed)
        throw CountMismatch("order " + r.order.str() + " vs k0^(ell^d) = " + r.expected.str());
    return r;
}

}  // namespace stabring
