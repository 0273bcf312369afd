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

#include <doctest.h>

#include "stabring/corpus.hpp"
#include "stabring/poly_parse.hpp"
#include "test_util.hpp"

using namespace stabring;
using namespace stabring::testing;

namespace {

Presentation scalar_pres(const std::string& entry, int dim) {
    IntPolyMatrix m(1, 1, dim);
    m.at(0, 0) = parse_int_poly(entry, dim);
    return Presentation::validate(m);
}

std::vector<IntPoly> vec(std::initializer_list<std::string> entries, int dim) {
    std::vector<IntPoly> v;
    for (const auto& e : entries) v.push_back(parse_int_poly(e, dim));
    return v;
}

Submodule standard_summand(const LinkingForm& form, bool dual) {
    int half = form.size() / 2;
    std::vector<std::vector<IntPoly>> cols;
    for (int j = 0; j < half; ++j) {
        std::vector<IntPoly> col(form.size(), IntPoly(form.dim()));
        col[(dual ? half : 0) + j] = IntPoly::constant(form.dim(), 1);
        cols.push_back(std::move(col));
    }
    return Submodule::from_columns(cols, form.size(), form.dim());
}

}  // namespace

TEST_SUITE_BEGIN("formations");

TEST_CASE("isotropy checks") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    CHECK(is_isotropic(h, standard_summand(h, false)));
    CHECK(is_isotropic(h, standard_summand(h, true)));

    // a mixed clock-shift generator at d = 1: lambda(g, g) is the nonzero
    // class (x + x^-1)/2, even though its trace vanishes
    LinkingForm h1 = standard_form(scalar_pres("2", 1), -1);
    Submodule mixed = Submodule::from_columns({vec({"1", "x1"}, 1)}, 2, 1);
    CHECK_FALSE(is_isotropic(h1, mixed));

    // the odd d = 0 form: lambda(g, g) = 1/2 on the generator itself
    RatPolyMatrix odd_gram(1, 1, 0);
    odd_gram.at(0, 0) = RatPoly::constant(0, Rat(1, 2));
    LinkingForm odd = LinkingForm::validate(scalar_pres("2", 0), odd_gram, -1);
    Submodule gen = Submodule::from_columns({vec({"1"}, 0)}, 1, 0);
    CHECK_FALSE(is_isotropic(odd, gen));

    Formation toric = builtin_formation("toric");
    CHECK(is_isotropic(toric.form(), toric.f()));
}

TEST_CASE("annihilators in the finite carrier") {
    // M inside H^-(coker 2) at d = 0 is its own annihilator
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    Submodule m = standard_summand(h, false);
    FinSubgroup ann = annihilator_finite(h, m, 1, Int(2));
    CompactPairing cp(h, 1);
    ZMat m_cols = ZMat::from_columns({cp.module().flatten(m.generator(0))}, 2);
    FinSubgroup m_fin(m_cols, cp.module().relation_matrix());
    CHECK(ann == m_fin);

    // the zero submodule annihilates everything
    Submodule zero = Submodule::from_columns({vec({"0", "0"}, 0)}, 2, 0);
    CHECK(annihilator_finite(h, zero, 1, Int(2)) == cp.module().full_group());

    // toric: |F_perp / F| = 16 at ell = 2
    Formation toric = builtin_formation("toric");
    CompactPairing cpt(toric.form(), 2);
    ZMat f_cols(cpt.module().ambient_dim(), 0);
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < toric.f().generator_count(); ++j)
        for (const Monomial& site : cpt.module().site_monomials())
            cols.push_back(cpt.module().flatten_translate(toric.f().generator(j), site));
    FinSubgroup f_fin(ZMat::from_columns(cols, cpt.module().ambient_dim()), cpt.module().relation_matrix());
    FinSubgroup f_perp = annihilator_finite(toric.form(), toric.f(), 2, Int(2));
    Int det = cpt.module().relations_det();
    CHECK(f_perp.order_in(det) / f_fin.order_in(det) == 16);
}

TEST_CASE("invertibility verdicts") {
    // product code: certified at d = 0 via the semion-d0 carrier relative
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    Formation product_d0 = Formation::validate(h, standard_summand(h, false), standard_summand(h, false));
    InvertibilityVerdict v0 = invertibility_check(product_d0, {1});
    CHECK(v0.status == InvertibilityVerdict::Status::CertifiedInvertible);

    // d = 1 products pass finite checks
    Formation product = builtin_formation("product");
    CHECK(invertibility_check(product, {1, 2, 3}).status ==
          InvertibilityVerdict::Status::PassedFiniteChecks);
    Formation product_dual = builtin_formation("product-dual");
    CHECK(invertibility_check(product_dual, {1, 2, 3}).status ==
          InvertibilityVerdict::Status::PassedFiniteChecks);

    // toric is falsified with a concrete witness
    Formation toric = builtin_formation("toric");
    InvertibilityVerdict vt = invertibility_check(toric, {2});
    CHECK(vt.status == InvertibilityVerdict::Status::Falsified);
    REQUIRE(vt.witness.has_value());
    CHECK(vt.witness_ell == 2);
    // the witness is genuinely in F_perp \ F: nonzero pairing with nothing,
    // i.e. commutes with the stabilizers but is not a stabilizer
    CompactPairing cp(toric.form(), 2);
    std::vector<Int> wflat = cp.module().flatten(*vt.witness);
    for (int j = 0; j < toric.f().generator_count(); ++j)
        for (const Monomial& site : cp.module().site_monomials())
            CHECK(cp.phase(cp.module().flatten_translate(toric.f().generator(j), site), wflat).is_zero());
}

TEST_CASE("certificates are checked for consistency") {
    // F = coker(2)[x] and P/F = coker(2)[x] for the d = 1 product code
    Formation product = builtin_formation("product");
    product.f_certificate = scalar_pres("2", 1);
    product.quotient_certificate = scalar_pres("2", 1);
    InvertibilityVerdict ok = invertibility_check(product, {1, 2});
    CHECK(ok.status == InvertibilityVerdict::Status::PassedFiniteChecks);
    bool saw_cert = false;
    for (const auto& e : ok.evidence) saw_cert |= e.find("certificate") != std::string::npos;
    CHECK(saw_cert);

    // an inconsistent certificate is an error, not a silent pass
    product.f_certificate = scalar_pres("3", 1);
    CHECK_THROWS_AS(invertibility_check(product, {1}), Error);
}

TEST_CASE("condensation preserves the d0 invariants") {
    LinkingForm h4 = standard_form(scalar_pres("4", 0), -1);
    Submodule m = standard_summand(h4, false);
    Submodule f = standard_summand(h4, true);
    Formation fm = Formation::validate(h4, m, f);
    Submodule k = Submodule::from_columns({vec({"0", "2"}, 0)}, 2, 0);
    Formation reduced = condense(fm, k);
    CHECK(formation_invariants_d0(fm) == formation_invariants_d0(reduced));
}

TEST_CASE("semion-d0 is a certified invertible code") {
    Formation sd0 = builtin_formation("semion-d0");
    CHECK(invertibility_check(sd0, {1}).status == InvertibilityVerdict::Status::CertifiedInvertible);
    CHECK(degeneracy(sd0, 1) == 1);
}

TEST_CASE("degeneracy") {
    Formation product = builtin_formation("product");
    Formation cluster = builtin_formation("cluster-like");
    for (long ell : {1L, 2L, 3L}) {
        CHECK(degeneracy(product, ell) == 1);
        CHECK(degeneracy(cluster, ell) == 1);
    }
    Formation toric = builtin_formation("toric");
    CHECK(degeneracy(toric, 2) == 4);
    CHECK(degeneracy(toric, 3) == 4);
}

TEST_CASE("degeneracy is multiplicative under stacking") {
    Formation toric = builtin_formation("toric");
    Formation stacked = stack(toric, toric);
    CHECK(degeneracy(stacked, 2) == 16);

    Formation product = builtin_formation("product");
    Formation mixed = stack(product, builtin_formation("cluster-like"));
    CHECK(degeneracy(mixed, 2) == 1);
}

TEST_CASE("stacking is symmetric up to permutation") {
    Formation a = builtin_formation("product");
    Formation b = builtin_formation("cluster-like");
    Formation ab = stack(a, b);
    Formation ba = stack(b, a);
    CHECK(ab.form().size() == ba.form().size());
    for (long ell : {1L, 2L}) CHECK(degeneracy(ab, ell) == degeneracy(ba, ell));
}

TEST_CASE("swap composition") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    Submodule m = standard_summand(h, false);
    Submodule md = standard_summand(h, true);
    Formation a = Formation::validate(h, m, md);
    Formation b = Formation::validate(h, md, m);
    Formation c = swap_compose(a, b);
    CHECK(c.m().generators == m.generators);
    CHECK(c.f().generators == m.generators);

    // middle mismatch is rejected
    Formation bad = Formation::validate(h, m, m);
    CHECK_THROWS_AS(swap_compose(a, bad), Error);
}

TEST_CASE("condensation of H^-(Z/4) to H^-(Z/2)") {
    LinkingForm h4 = standard_form(scalar_pres("4", 0), -1);
    Submodule m = standard_summand(h4, false);
    Submodule f = standard_summand(h4, true);
    Formation fm = Formation::validate(h4, m, f);
    // K = the order-2 subgroup of the dual summand
    Submodule k = Submodule::from_columns({vec({"0", "2"}, 0)}, 2, 0);
    Formation reduced = condense(fm, k);
    CHECK(reduced.form().carrier().k0() == 4);  // Z/2 x Z/2
    CHECK(reduced.form().size() == 2);
    // the induced pairing of the two generators is the qubit symplectic
    std::vector<IntPoly> e1{IntPoly::constant(0, 1), IntPoly(0)};
    std::vector<IntPoly> e2{IntPoly(0), IntPoly::constant(0, 1)};
    CHECK(reduced.form().eval_vectors(e1, e2).trace() == RatMod1(Rat(1, 2)));
    CHECK(invertibility_check(reduced, {1}).status == InvertibilityVerdict::Status::CertifiedInvertible);
}

TEST_CASE("condensing F itself collapses a product code to zero") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    Submodule m = standard_summand(h, false);
    Submodule f = standard_summand(h, true);
    Formation fm = Formation::validate(h, m, f);
    Formation reduced = condense(fm, f);
    CHECK(reduced.form().size() == 0);
}

TEST_CASE("condensation side conditions are reported") {
    LinkingForm h = standard_form(scalar_pres("4", 0), -1);
    Submodule m = standard_summand(h, false);
    Formation fm = Formation::validate(h, m, m);
    // K = 2 e_1 sits inside M = F, but K_perp + F is too small
    Submodule k = Submodule::from_columns({vec({"2", "0"}, 0)}, 2, 0);
    CHECK_THROWS_AS(condense(fm, k), SideConditionFailed);
    // K not inside F at all
    Submodule outside = Submodule::from_columns({vec({"0", "2"}, 0)}, 2, 0);
    CHECK_THROWS_AS(condense(fm, outside), NotSublagrangian);
}

TEST_CASE("condensed pairing is independent of coset representatives") {
    LinkingForm h4 = standard_form(scalar_pres("4", 0), -1);
    Submodule m = standard_summand(h4, false);
    Submodule f = standard_summand(h4, true);
    Formation fm = Formation::validate(h4, m, f);
    Submodule k = Submodule::from_columns({vec({"0", "2"}, 0)}, 2, 0);
    Formation reduced = condense(fm, k);
    CHECK(reduced.form().size() == 2);
    // the induced pairing on K_perp / K is independent of the chosen coset
    // representatives: shifting either argument by K leaves it fixed mod 1
    CompactPairing cp(fm.form(), 1);
    std::vector<Int> a{Int(2), Int(1)};   // K_perp = {(a, b) : a even}
    std::vector<Int> c{Int(0), Int(1)};
    std::vector<Int> kk{Int(0), Int(2)};
    RatMod1 base = cp.phase(a, c);
    for (int t = 0; t < 4; ++t)
        for (int s = 0; s < 4; ++s) {
            std::vector<Int> as{a[0] + t * kk[0], a[1] + t * kk[1]};
            std::vector<Int> cs{c[0] + s * kk[0], c[1] + s * kk[1]};
            CHECK(cp.phase(as, cs) == base);
        }
}

TEST_CASE("isotropic F sits inside its annihilator at every ell") {
    for (const std::string& name : {"product", "product-dual", "cluster-like", "toric"}) {
        Formation fm = builtin_formation(name);
        for (long ell = 1; ell <= (fm.dim() == 2 ? 2 : 3); ++ell) {
            CompactPairing cp(fm.form(), ell);
            std::vector<std::vector<Int>> cols;
            for (int j = 0; j < fm.f().generator_count(); ++j)
                for (const Monomial& site : cp.module().site_monomials())
                    cols.push_back(cp.module().flatten_translate(fm.f().generator(j), site));
            FinSubgroup f_fin(ZMat::from_columns(cols, cp.module().ambient_dim()),
                              cp.module().relation_matrix());
            FinSubgroup f_perp = annihilator_finite(fm.form(), fm.f(), ell, cp.exponent());
            CHECK(f_perp.contains_subgroup(f_fin));
        }
    }
}

TEST_CASE("d0 invariants respect the composition relation") {
    // lagrangians in H^-(Z/2): M, the dual, and the diagonal
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    std::vector<Submodule> lagr{standard_summand(h, false), standard_summand(h, true),
                                Submodule::from_columns({vec({"1", "1"}, 0)}, 2, 0)};
    for (const auto& m : lagr)
        for (const auto& f : lagr)
            for (const auto& g : lagr) {
                Formation left = stack(Formation::validate(h, m, f), Formation::validate(h, f, g));
                Formation right = Formation::validate(h, m, g);
                FormationInvariantsD0 li = formation_invariants_d0(left);
                FormationInvariantsD0 ri = formation_invariants_d0(right);
                CHECK(li == ri);
            }
}

TEST_SUITE_END();
