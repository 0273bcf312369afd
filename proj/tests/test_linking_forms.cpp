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

#include <functional>

#include "stabring/linking_form.hpp"
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

RatPolyMatrix scalar_gram(const Rat& v, int dim) {
    RatPolyMatrix g(1, 1, dim);
    g.at(0, 0) = RatPoly::constant(dim, v);
    return g;
}

std::vector<IntPoly> vec(std::initializer_list<std::string> entries, int dim) {
    std::vector<IntPoly> v;
    for (const auto& e : entries) v.push_back(parse_int_poly(e, dim));
    return v;
}

}  // namespace

TEST_SUITE_BEGIN("linking_forms");

TEST_CASE("validation of scalar grams on coker(2)") {
    Presentation p = scalar_pres("2", 0);
    CHECK_NOTHROW(LinkingForm::validate(p, scalar_gram(Rat(1, 2), 0), 1));
    CHECK_NOTHROW(LinkingForm::validate(p, scalar_gram(Rat(1, 2), 0), -1));
    CHECK_THROWS_AS(LinkingForm::validate(p, scalar_gram(Rat(1, 3), 0), 1), IllDefined);
    CHECK_NOTHROW(LinkingForm::validate(p, scalar_gram(Rat(0), 0), -1));
}

TEST_CASE("hermiticity is checked mod integral matrices") {
    Presentation p = direct_sum(scalar_pres("2", 0), scalar_pres("2", 0));
    RatPolyMatrix g(2, 2, 0);
    g.at(0, 1) = RatPoly::constant(0, Rat(1, 2));
    // +1/2 vs -1/2 below the diagonal both satisfy eps-hermiticity mod Z
    g.at(1, 0) = RatPoly::constant(0, Rat(1, 2));
    CHECK_NOTHROW(LinkingForm::validate(p, g, -1));
    // a genuinely non-hermitian gram
    RatPolyMatrix bad(2, 2, 0);
    bad.at(0, 1) = RatPoly::constant(0, Rat(1, 4));
    CHECK_THROWS_AS(LinkingForm::validate(direct_sum(scalar_pres("4", 0), scalar_pres("4", 0)), bad, -1),
                    NotHermitian);
}

TEST_CASE("standard form of coker(2) at d = 0") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    CHECK(h.size() == 2);
    CHECK(h.exactly_hermitian());
    // pairing of the two summand generators is 1/2 mod Z
    PairingValue v = h.eval_vectors(vec({"1", "0"}, 0), vec({"0", "1"}, 0));
    CHECK(v.trace() == RatMod1(Rat(1, 2)));
    CHECK(h.eval_vectors(vec({"1", "0"}, 0), vec({"0", "0"}, 0)).is_zero());
}

TEST_CASE("standard form of the empty presentation") {
    LinkingForm h = standard_form(Presentation(1), -1);
    CHECK(h.size() == 0);
}

TEST_CASE("pairing is representative independent") {
    Presentation m = scalar_pres("2", 1);
    LinkingForm h = standard_form(m, -1);
    Presentation carrier = h.carrier();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntPoly> x{random_poly(1), random_poly(1)};
        std::vector<IntPoly> y{random_poly(1), random_poly(1)};
        PairingValue base = h.eval_vectors(x, y);
        std::vector<IntPoly> v{random_poly(1), random_poly(1)};
        std::vector<IntPoly> shift = carrier.boundary().apply(v);
        std::vector<IntPoly> xs = x;
        for (int i = 0; i < 2; ++i) xs[i] += shift[i];
        CHECK(h.eval_vectors(xs, y) == base);
        std::vector<IntPoly> ys = y;
        for (int i = 0; i < 2; ++i) ys[i] += shift[i];
        CHECK(h.eval_vectors(x, ys) == base);
    }
}

TEST_CASE("epsilon-hermiticity of pairing values") {
    for (int eps : {-1, 1}) {
        LinkingForm h = standard_form(scalar_pres("3", 1), eps);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<IntPoly> x{random_poly(1), random_poly(1)};
            std::vector<IntPoly> y{random_poly(1), random_poly(1)};
            RatPoly xy = h.pairing_lift(x, y);
            RatPoly yx = h.pairing_lift(y, x);
            RatPoly defect = xy - Rat(eps) * yx.involution();
            CHECK(is_integral(defect));
        }
    }
}

TEST_CASE("commutator phases") {
    // qubit X vs Z anticommute
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    Presentation carrier = h.carrier();
    ModuleElement zgen(carrier, vec({"1", "0"}, 0));
    ModuleElement xgen(carrier, vec({"0", "1"}, 0));
    CHECK(h.commutator_phase(zgen, xgen) == RatMod1(Rat(1, 2)));

    // distant translates commute
    LinkingForm h1 = standard_form(scalar_pres("2", 1), -1);
    Presentation c1 = h1.carrier();
    ModuleElement a(c1, vec({"1", "0"}, 1));
    ModuleElement b(c1, vec({"0", "x1^3"}, 1));
    CHECK(h1.commutator_phase(a, b) == RatMod1(Rat(0)));

    // antisymmetry
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IntPoly> x{random_poly(1), random_poly(1)};
        std::vector<IntPoly> y{random_poly(1), random_poly(1)};
        RatMod1 xy = h1.eval_vectors(x, y).trace();
        RatMod1 yx = h1.eval_vectors(y, x).trace();
        CHECK(xy + yx == RatMod1(Rat(0)));
    }

    // biadditivity mod 1
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IntPoly> x{random_poly(1), random_poly(1)};
        std::vector<IntPoly> y{random_poly(1), random_poly(1)};
        std::vector<IntPoly> z{random_poly(1), random_poly(1)};
        std::vector<IntPoly> yz{y[0] + z[0], y[1] + z[1]};
        RatMod1 lhs = h1.eval_vectors(x, yz).trace();
        RatMod1 rhs = h1.eval_vectors(x, y).trace() + h1.eval_vectors(x, z).trace();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evenness") {
    CHECK(is_even(standard_form(scalar_pres("2", 0), -1)));
    CHECK(is_even(standard_form(scalar_pres("2", 1), -1)));
    // the odd anti-symmetric form on Z/2: lambda(1, 1) = 1/2 is nonzero.
    // An anti-hermitian diagonal value at d = 0 is necessarily 0 or 1/2
    // mod Z, so 1/2 is the odd case.
    LinkingForm odd = LinkingForm::validate(scalar_pres("2", 0), scalar_gram(Rat(1, 2), 0), -1);
    CHECK_FALSE(is_even(odd));
    // zero form is even
    LinkingForm zero = LinkingForm::validate(scalar_pres("2", 0), scalar_gram(Rat(0), 0), -1);
    CHECK(is_even(zero));
    // evenness preserved under orthogonal sum
    LinkingForm h2 = standard_form(scalar_pres("2", 0), -1);
    CHECK(is_even(orthogonal_sum(h2, h2)));
}

TEST_CASE("nonsingularity") {
    LinkingForm h = standard_form(scalar_pres("2", 0), -1);
    CHECK(nonsingular_check(h, {}).status == NonsingularResult::Status::CertifiedD0);

    LinkingForm zero = LinkingForm::validate(scalar_pres("2", 0), scalar_gram(Rat(0), 0), -1);
    NonsingularResult r = nonsingular_check(zero, {});
    CHECK(r.status == NonsingularResult::Status::FalsifiedAt);
    CHECK(r.ell == 1);

    LinkingForm h1 = standard_form(scalar_pres("2", 1), -1);
    CHECK(nonsingular_check(h1, {1, 2, 3}).status == NonsingularResult::Status::PassedFiniteChecks);

    // a singular d = 1 form: zero gram on coker(2)[x]
    RatPolyMatrix zg(1, 1, 1);
    LinkingForm zero1 = LinkingForm::validate(scalar_pres("2", 1), zg, -1);
    NonsingularResult r1 = nonsingular_check(zero1, {1, 2});
    CHECK(r1.status == NonsingularResult::Status::FalsifiedAt);
    CHECK(r1.ell == 1);
}

TEST_CASE("orthogonal sum block structure") {
    LinkingForm a = standard_form(scalar_pres("2", 0), -1);
    LinkingForm b = standard_form(scalar_pres("3", 0), -1);
    LinkingForm s = orthogonal_sum(a, b);
    CHECK(s.size() == 4);
    // H^-(m1) + H^-(m2) pairs as H^-(m1 + m2) up to coordinate permutation
    LinkingForm joint = standard_form(direct_sum(scalar_pres("2", 0), scalar_pres("3", 0)), -1);
    // compare pairings through the permutation (m1, d1, m2, d2) -> (m1, m2, d1, d2)
    auto permuted = [&](std::initializer_list<std::string> entries) {
        std::vector<IntPoly> in = vec(entries, 0);
        return std::vector<IntPoly>{in[0], in[2], in[1], in[3]};
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto rand_entries = [&]() {
            std::vector<std::string> e;
            for (int i = 0; i < 4; ++i) e.push_back(std::to_string(rand_int(-3, 3)));
            return e;
        };
        auto ex = rand_entries();
        auto ey = rand_entries();
        std::vector<IntPoly> xs = vec({ex[0], ex[1], ex[2], ex[3]}, 0);
        std::vector<IntPoly> ys = vec({ey[0], ey[1], ey[2], ey[3]}, 0);
        std::vector<IntPoly> xj = permuted({ex[0], ex[1], ex[2], ex[3]});
        std::vector<IntPoly> yj = permuted({ey[0], ey[1], ey[2], ey[3]});
        CHECK(s.eval_vectors(xs, ys).trace() == joint.eval_vectors(xj, yj).trace());
    }
}

namespace {

// Greedy symplectic splitting over the finite carrier: repeatedly pull a
// maximal-order element x, a partner y with pairing exactly 1/m, and pass
// to the orthogonal complement. Succeeding on every step realizes an
// explicit isomorphism with a standard form H^-(D).
bool splits_into_standard_pairs(const LinkingForm& form) {
    CompactPairing cp(form, 1);
    const auto& q = cp.module().quotient();
    long n = q.order().convert_to<long>();

    std::vector<std::vector<Int>> elements;
    std::vector<Int> factors = q.factors();
    std::vector<Int> c(factors.size(), Int(0));
    for (long i = 0; i < n; ++i) {
        elements.push_back(q.lift(c));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            c[k] += 1;
            if (c[k] < factors[k]) break;
            c[k] = 0;
        }
    }

    auto order_of = [&](const std::vector<Int>& z) {
        std::vector<Int> acc(z.size(), Int(0));
        for (long k = 1; k <= n; ++k) {
            for (std::size_t i = 0; i < z.size(); ++i) acc[i] += z[i];
            if (q.is_zero_class(acc)) return k;
        }
        return 0L;
    };

    std::function<bool(std::vector<std::vector<Int>>)> split =
        [&](std::vector<std::vector<Int>> pool) -> bool {
        if (pool.size() <= 1) return pool.size() == 1;  // just the zero class
        long m = 0;
        std::vector<Int> x;
        for (const auto& z : pool) {
            long o = order_of(z);
            if (o > m) {
                m = o;
                x = z;
            }
        }
        // partner with pairing of full order m, scaled to exactly 1/m
        for (const auto& y : pool) {
            Rat v = cp.phase(x, y).v;
            if (den(v) != m) continue;
            Int a = num(v);
            Int k = 0;  // inverse of a mod m
            for (Int t = 1; t < m; ++t)
                if (t * a % m == 1) k = t;
            if (k == 0) continue;
            std::vector<Int> y2(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) y2[i] = k * y[i];
            if (cp.phase(x, y2).v != Rat(1, m)) continue;
            if (!cp.phase(x, x).is_zero() || !cp.phase(y2, y2).is_zero()) continue;
            // orthogonal complement inside the pool
            std::vector<std::vector<Int>> rest;
            for (const auto& z : pool)
                if (cp.phase(x, z).is_zero() && cp.phase(y2, z).is_zero()) rest.push_back(z);
            if (static_cast<long>(rest.size()) * m * m != static_cast<long>(pool.size())) continue;
            return split(std::move(rest));
        }
        return false;
    };
    return split(elements);
}

}  // namespace

TEST_CASE("even nonsingular d0 forms split into standard hyperbolic pairs") {
    // the constructive Wall-type statement on the small corpus
    CHECK(splits_into_standard_pairs(standard_form(scalar_pres("2", 0), -1)));
    CHECK(splits_into_standard_pairs(standard_form(scalar_pres("3", 0), -1)));
    CHECK(splits_into_standard_pairs(standard_form(scalar_pres("4", 0), -1)));
    CHECK(splits_into_standard_pairs(standard_form(scalar_pres("8", 0), -1)));
    CHECK(splits_into_standard_pairs(
        orthogonal_sum(standard_form(scalar_pres("2", 0), -1), standard_form(scalar_pres("4", 0), -1))));
    CHECK(splits_into_standard_pairs(
        orthogonal_sum(standard_form(scalar_pres("2", 0), -1), standard_form(scalar_pres("2", 0), -1))));

    // a twisted basis of H^-(Z/4) still pairs as the standard form
    Presentation z4 = scalar_pres("4", 0);
    LinkingForm h = standard_form(z4, -1);
    std::vector<std::vector<IntPoly>> twisted;
    twisted.push_back(vec({"1", "0"}, 0));
    twisted.push_back(vec({"1", "1"}, 0));
    CHECK(is_even(h, twisted));
    PairingValue tw = h.eval_vectors(twisted[1], twisted[0]);
    CHECK(tw.trace() == RatMod1(Rat(1, 4)));
}

TEST_SUITE_END();
