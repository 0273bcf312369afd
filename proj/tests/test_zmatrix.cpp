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

#include "stabring/finite_abelian.hpp"
#include "test_util.hpp"

using namespace stabring;
using namespace stabring::testing;

TEST_SUITE_BEGIN("zmatrix");

TEST_CASE("smith normal form reconstructs the matrix") {
    for (int trial = 0; trial < 40; ++trial) {
        int r = rand_int(1, 5), c = rand_int(1, 5);
        ZMat a = random_zmat(r, c);
        SmithForm s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(s.u * s.uinv == ZMat::identity(r));
        CHECK(s.v * s.vinv == ZMat::identity(c));
        // divisibility chain
        auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0 && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

TEST_CASE("smith form of a known matrix") {
    // [[2, 1],[0, 3]] presents Z/6 as diag(1, 6)
    ZMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 1) = 3;
    SmithForm s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
}

TEST_CASE("integer determinant by elimination") {
    for (int trial = 0; trial < 30; ++trial) {
        int n = rand_int(1, 4);
        ZMat a = random_zmat(n, n);
        SmithForm s = smith_normal_form(a);
        Int prod = 1;
        for (const Int& d : s.diagonal()) prod *= d;
        Int det = zmat_det(a);
        CHECK((det < 0 ? Int(-det) : det) == prod);
    }
}

TEST_CASE("integer solve") {
    for (int trial = 0; trial < 30; ++trial) {
        int n = rand_int(1, 4);
        ZMat a = random_zmat(n, n);
        std::vector<Int> x(n);
        for (int i = 0; i < n; ++i) x[i] = rand_int(-5, 5);
        std::vector<Int> b = a.apply(x);
        auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b);
    }
    // no integral solution
    ZMat two(1, 1);
    two.at(0, 0) = 2;
    CHECK_FALSE(solve_integer(two, {Int(1)}).has_value());
}

TEST_CASE("kernel columns annihilate") {
    for (int trial = 0; trial < 20; ++trial) {
        ZMat a = random_zmat(rand_int(1, 3), rand_int(2, 5));
        ZMat k = integer_kernel(a);
        for (int j = 0; j < k.cols(); ++j) {
            std::vector<Int> v = a.apply(k.column(j));
            for (const Int& c : v) CHECK(c == 0);
        }
    }
}

TEST_CASE("hnf is canonical for the row lattice") {
    for (int trial = 0; trial < 30; ++trial) {
        ZMat a = random_zmat(4, 3);
        // permuting and mixing rows preserves the lattice
        ZMat b = a;
        zdetail::row_swap(b, 0, 2);
        zdetail::row_addmul(b, 1, 3, Int(rand_int(-3, 3)));
        CHECK(hnf_rows(a) == hnf_rows(b));
    }
}

TEST_CASE("lattice intersection") {
    // 2Z and 3Z inside Z meet in 6Z
    ZMat a(1, 1), b(1, 1);
    a.at(0, 0) = 2;
    b.at(0, 0) = 3;
    ZMat meet = lattice_intersection(a, b);
    REQUIRE(meet.cols() == 1);
    Int g = meet.at(0, 0);
    CHECK((g == 6 || g == -6));
}

TEST_CASE("quotient system coordinates") {
    // Z^2 / [[2, 0],[0, 4]]: factors 2, 4; canonical lift round-trips
    ZMat basis(2, 2);
    basis.at(0, 0) = 2;
    basis.at(1, 1) = 4;
    QuotientSystem q(basis);
    CHECK(q.order() == 8);
    REQUIRE(q.factors().size() == 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<Int> c{Int(a), Int(b)};
            std::vector<Int> lifted = q.lift(c);
            CHECK(q.coords(lifted) == c);
        }
    CHECK(q.is_zero_class({Int(2), Int(4)}));
    CHECK(q.is_zero_class({Int(-2), Int(8)}));
    CHECK_FALSE(q.is_zero_class({Int(1), Int(0)}));
}

TEST_CASE("subgroup order, membership, equality") {
    // ambient Z^2 / diag(4, 4); subgroup generated by (2, 0) and (0, 2)
    ZMat rel = ZMat::diagonal({Int(4), Int(4)});
    ZMat gens = ZMat::from_columns({{Int(2), Int(0)}, {Int(0), Int(2)}}, 2);
    FinSubgroup s(gens, rel);
    CHECK(s.order_in(16) == 4);
    CHECK(s.contains({Int(2), Int(2)}));
    CHECK_FALSE(s.contains({Int(1), Int(0)}));

    ZMat gens2 = ZMat::from_columns({{Int(2), Int(2)}, {Int(0), Int(2)}}, 2);
    CHECK(FinSubgroup(gens2, rel) == s);

    ZMat gens3 = ZMat::from_columns({{Int(2), Int(0)}}, 2);
    FinSubgroup smaller(gens3, rel);
    CHECK(smaller.order_in(16) == 2);
    CHECK(s.contains_subgroup(smaller));
    CHECK_FALSE(smaller.contains_subgroup(s));

    CHECK(subgroup_sum(s, smaller) == s);
    CHECK(subgroup_intersection(s, smaller) == smaller);

    // invariant factors of the subgroup (Z/2 x Z/2 here)
    auto f = s.invariant_factors(rel);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 2);
}

TEST_SUITE_END();
