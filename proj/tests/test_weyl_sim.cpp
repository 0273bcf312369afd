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
#include "stabring/schrodinger.hpp"
#include "test_util.hpp"

using namespace stabring;
using namespace stabring::testing;

namespace {

Presentation scalar_pres(const std::string& entry, int dim) {
    IntPolyMatrix m(1, 1, dim);
    m.at(0, 0) = parse_int_poly(entry, dim);
    return Presentation::validate(m);
}

Submodule first_block(const LinkingForm& form) {
    int half = form.size() / 2;
    std::vector<std::vector<IntPoly>> cols;
    for (int j = 0; j < half; ++j) {
        std::vector<IntPoly> col(form.size(), IntPoly(form.dim()));
        col[j] = IntPoly::constant(form.dim(), 1);
        cols.push_back(std::move(col));
    }
    return Submodule::from_columns(cols, form.size(), form.dim());
}

WeylElement random_weyl(const WeylAlgebra& alg, int half, int dim) {
    std::vector<IntPoly> v;
    for (int i = 0; i < 2 * half; ++i) v.push_back(random_poly(dim, 2, 2, 1));
    WeylElement w = make_weyl(alg, v);
    w.phase = mod_two(Rat(rand_int(0, 7), 4));
    // canonical primitive: reduce the vector to the group normal form
    return weyl_canonical(alg, w);
}

double weyl_matrix_residual(const SchrodingerRep& rep, const WeylAlgebra& alg, const WeylElement& a,
                            const WeylElement& b) {
    WeylElement ab = weyl_mul(alg, a, b);
    Eigen::MatrixXcd lhs = rep.matrix(a) * rep.matrix(b);
    Eigen::MatrixXcd rhs = rep.matrix(ab);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE_BEGIN("weyl_sim");

TEST_CASE("symbolic weyl relations") {
    LinkingForm h = standard_form(scalar_pres("3", 0), -1);
    WeylAlgebra alg(h, 1);
    WeylElement id = make_weyl(alg, {IntPoly(0), IntPoly(0)});
    for (int trial = 0; trial < 30; ++trial) {
        WeylElement a = random_weyl(alg, 1, 0);
        WeylElement b = random_weyl(alg, 1, 0);
        // identity element
        CHECK(weyl_mul(alg, id, a).phase == a.phase);
        // adjoint inverts: W(p) W(p)* = 1 with no leftover phase
        WeylElement inv = weyl_mul(alg, a, weyl_adjoint(a));
        CHECK(inv.phase == 0);
        for (const Int& c : inv.vec) CHECK(c == 0);
        // commutator antisymmetry
        RatMod1 ab = weyl_commutator(alg, a, b);
        RatMod1 ba = weyl_commutator(alg, b, a);
        CHECK(ab + ba == RatMod1(Rat(0)));
    }
}

TEST_CASE("pauli matrices from H^-(coker 2)") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    SchrodingerRep rep(h, 1, first_block(h));
    REQUIRE(rep.dim() == 2);
    const WeylAlgebra& alg = rep.algebra();

    Eigen::MatrixXcd z = rep.matrix(make_weyl(alg, {parse_int_poly("1", 0), IntPoly(0)}));
    Eigen::MatrixXcd x = rep.matrix(make_weyl(alg, {IntPoly(0), parse_int_poly("1", 0)}));

    // Z diagonal with entries +-1, X the shift
    CHECK(std::abs(z(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(z(1, 1) + 1.0) < 1e-12);
    CHECK(std::abs(z(0, 1)) < 1e-12);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(x(0, 1) - 1.0) < 1e-12);
    CHECK(std::abs(x(0, 0)) < 1e-12);

    // anticommutation, symbolically and numerically
    CHECK((z * x + x * z).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(weyl_commutator(alg, make_weyl(alg, {parse_int_poly("1", 0), IntPoly(0)}),
                          make_weyl(alg, {IntPoly(0), parse_int_poly("1", 0)})) == RatMod1(Rat(1, 2)));
}

TEST_CASE("clock and shift for q = 3 and q = 4") {
    for (long q : {3L, 4L}) {
        LinkingForm h = standard_form(scalar_pres(std::to_string(q), 0), -1);
        SchrodingerRep rep(h, 1, first_block(h));
        REQUIRE(rep.dim() == q);
        const WeylAlgebra& alg = rep.algebra();
        Eigen::MatrixXcd z = rep.matrix(make_weyl(alg, {parse_int_poly("1", 0), IntPoly(0)}));
        Eigen::MatrixXcd x = rep.matrix(make_weyl(alg, {IntPoly(0), parse_int_poly("1", 0)}));
        // X is the cyclic shift
        for (long b = 0; b < q; ++b)
            for (long a = 0; a < q; ++a) {
                std::complex<double> expect = (a == (b + 1) % q) ? 1.0 : 0.0;
                CHECK(std::abs(x(a, b) - expect) < 1e-12);
            }
        // Z is diagonal with q-th roots of unity in geometric progression
        std::complex<double> omega = z(1, 1) / z(0, 0);
        CHECK(std::abs(std::pow(omega, q) - 1.0) < 1e-10);
        CHECK(std::abs(omega - 1.0) > 0.5);
        for (long b = 0; b < q; ++b) CHECK(std::abs(z(b, b) - std::pow(omega, b)) < 1e-10);
        // commutator matches the symbolic phase exactly
        Eigen::MatrixXcd comm = z.inverse() * x.inverse() * z * x;
        RatMod1 sym = weyl_commutator(alg, make_weyl(alg, {parse_int_poly("1", 0), IntPoly(0)}),
                                      make_weyl(alg, {IntPoly(0), parse_int_poly("1", 0)}));
        std::complex<double> expect = std::polar(1.0, 2 * M_PI * sym.v.convert_to<double>());
        CHECK((comm - expect * Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("lagrangian elements act diagonally") {
    LinkingForm h = standard_form(scalar_pres("2", 1), -1);
    SchrodingerRep rep(h, 2, first_block(h));
    const WeylAlgebra& alg = rep.algebra();
    for (const Monomial& site : alg.module().site_monomials()) {
        Eigen::MatrixXcd m =
            rep.matrix(make_weyl_translate(alg, {parse_int_poly("1", 1), IntPoly(1)}, site));
        for (long i = 0; i < rep.dim(); ++i)
            for (long j = 0; j < rep.dim(); ++j)
                if (i != j) CHECK(std::abs(m(i, j)) < 1e-12);
    }
}

TEST_CASE("matrix representation satisfies the weyl relation") {
    // d = 0 qutrit and d = 1 qubit chain fixtures
    {
        LinkingForm h = standard_form(scalar_pres("3", 0), -1);
        SchrodingerRep rep(h, 1, first_block(h));
        const WeylAlgebra& alg = rep.algebra();
        for (int trial = 0; trial < 200; ++trial) {
            WeylElement a = random_weyl(alg, 1, 0);
            WeylElement b = random_weyl(alg, 1, 0);
            CHECK(weyl_matrix_residual(rep, alg, a, b) < 1e-12);
        }
    }
    {
        LinkingForm h = standard_form(scalar_pres("2", 1), -1);
        SchrodingerRep rep(h, 2, first_block(h));
        const WeylAlgebra& alg = rep.algebra();
        for (int trial = 0; trial < 200; ++trial) {
            WeylElement a = random_weyl(alg, 1, 1);
            WeylElement b = random_weyl(alg, 1, 1);
            CHECK(weyl_matrix_residual(rep, alg, a, b) < 1e-12);
        }
    }
}

TEST_CASE("unitarity and adjoint consistency") {
    LinkingForm h = standard_form(scalar_pres("4", 0), -1);
    SchrodingerRep rep(h, 1, first_block(h));
    const WeylAlgebra& alg = rep.algebra();
    for (int trial = 0; trial < 60; ++trial) {
        WeylElement a = random_weyl(alg, 1, 0);
        Eigen::MatrixXcd m = rep.matrix(a);
        CHECK((m * m.adjoint() - Eigen::MatrixXcd::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff() <
              1e-12);
        CHECK((rep.matrix(weyl_adjoint(a)) - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("commutator phases are section independent") {
    LinkingForm h = standard_form(scalar_pres("2", 1), -1);
    SchrodingerRep rep(h, 2, first_block(h));
    const WeylAlgebra& alg = rep.algebra();
    // an arbitrary lagrangian-valued section shift per basis state
    std::vector<std::vector<Int>> shifts;
    for (long b = 0; b < rep.dim(); ++b) {
        std::vector<Int> s(rep.split(), Int(0));
        for (int i = 0; i < rep.split(); ++i) s[i] = rand_int(-2, 2);
        shifts.push_back(std::move(s));
    }
    Eigen::MatrixXcd t = rep.section_twist(shifts);
    for (int trial = 0; trial < 40; ++trial) {
        WeylElement a = random_weyl(alg, 1, 1);
        WeylElement b = random_weyl(alg, 1, 1);
        Eigen::MatrixXcd ma = t * rep.matrix(a) * t.adjoint();
        Eigen::MatrixXcd mb = t * rep.matrix(b) * t.adjoint();
        Eigen::MatrixXcd lhs = ma * mb;
        Eigen::MatrixXcd rhs = mb * ma;
        std::complex<double> phase =
            std::polar(1.0, 2 * M_PI * weyl_commutator(alg, a, b).v.convert_to<double>());
        CHECK((lhs - phase * rhs).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("hilbert dimension equals k0^(ell^d)") {
    LinkingForm h = standard_form(scalar_pres("3", 1), -1);
    for (long ell : {1L, 2L}) {
        SchrodingerRep rep(h, ell, first_block(h));
        CHECK(rep.dim() == pow_int(Int(3), static_cast<unsigned long>(ell)).convert_to<long>());
    }
}

TEST_CASE("ground spaces of the invertible corpus") {
    // product code: dimension 1, ground state |0...0>
    Formation product = builtin_formation("product");
    SchrodingerRep rep(product.form(), 2, product.m());
    HamiltonianTerms h = build_hamiltonian(product, 2, rep);
    GroundSpace g = ground_space(h.terms, rep);
    CHECK(g.dimension == 1);
    CHECK(g.frustration_free);
    CHECK(std::abs(g.projector(0, 0) - 1.0) < 1e-10);

    // dual product: uniform superposition
    Formation dual = builtin_formation("product-dual");
    SchrodingerRep drep(dual.form(), 2, dual.m());
    HamiltonianTerms dh = build_hamiltonian(dual, 2, drep);
    GroundSpace dg = ground_space(dh.terms, drep);
    CHECK(dg.dimension == 1);
    double uniform = 1.0 / static_cast<double>(drep.dim());
    for (long i = 0; i < drep.dim(); ++i)
        for (long j = 0; j < drep.dim(); ++j) CHECK(std::abs(dg.projector(i, j) - uniform) < 1e-10);

    // cluster-like: still a unique ground state
    Formation cluster = builtin_formation("cluster-like");
    SchrodingerRep crep(cluster.form(), 2, cluster.m());
    GroundSpace cg = ground_space(build_hamiltonian(cluster, 2, crep).terms, crep);
    CHECK(cg.dimension == 1);
}

TEST_CASE("toric code ground space on the 2x2 torus") {
    Formation toric = builtin_formation("toric");
    SchrodingerRep rep(toric.form(), 2, toric.m());
    REQUIRE(rep.dim() == 256);
    HamiltonianTerms h = build_hamiltonian(toric, 2, rep);
    GroundSpace g = ground_space(h.terms, rep);
    CHECK(g.dimension == 4);
    CHECK(degeneracy(toric, 2) == 4);
}

TEST_CASE("separators and flippers") {
    // single qubit: Z separates, X flips
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    SchrodingerRep rep(h, 1, first_block(h));
    const WeylAlgebra& alg = rep.algebra();
    std::vector<WeylElement> seps{make_weyl(alg, {parse_int_poly("-1", 0), IntPoly(0)})};
    std::vector<WeylElement> flips{make_weyl(alg, {IntPoly(0), parse_int_poly("1", 0)})};
    SeparatorReport r = verify_lfs(rep, seps, flips, 2);
    CHECK(r.commuting);
    CHECK(r.separating);
    CHECK(r.flips_ok);

    // qubit chain at ell = 2: single-site clocks separate, shifts flip
    LinkingForm hc = standard_form(scalar_pres("2", 1), -1);
    SchrodingerRep repc(hc, 2, first_block(hc));
    const WeylAlgebra& algc = repc.algebra();
    std::vector<WeylElement> seps2, flips2;
    for (const Monomial& site : algc.module().site_monomials()) {
        seps2.push_back(make_weyl_translate(algc, {parse_int_poly("-1", 1), IntPoly(1)}, site));
        flips2.push_back(make_weyl_translate(algc, {IntPoly(1), parse_int_poly("1", 1)}, site));
    }
    SeparatorReport r2 = verify_lfs(repc, seps2, flips2, 2);
    CHECK(r2.commuting);
    CHECK(r2.separating);
    CHECK(r2.flips_ok);

    // dropping a separator loses separation
    std::vector<WeylElement> partial{seps2[0]};
    SeparatorReport r3 = verify_lfs(repc, partial, {flips2[0]}, 2);
    CHECK_FALSE(r3.separating);
}

TEST_CASE("weyl algebra rejects grams that are hermitian only mod Z") {
    Presentation z2 = scalar_pres("2", 0);
    RatPolyMatrix g(1, 1, 0);
    g.at(0, 0) = RatPoly::constant(0, Rat(1, 2));
    LinkingForm form = LinkingForm::validate(z2, g, -1);  // 1/2 = -1/2 mod Z only
    CHECK_THROWS_AS(WeylAlgebra(form, 1), Error);
}

TEST_SUITE_END();
