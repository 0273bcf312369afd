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

#include "stabring/zmatrix.hpp"

namespace stabring {

/// Coordinate system for the quotient Z^N / L of a full-rank lattice L,
/// built from the Smith normal form of a basis matrix of L. Gives canonical
/// coordinates in the product of cyclic factors plus a deterministic lift.
class QuotientSystem {
  public:
    QuotientSystem() = default;

    /// basis: N x N matrix whose columns span L.
    explicit QuotientSystem(const ZMat& basis) {
        if (basis.rows() != basis.cols()) throw DimensionMismatch("quotient lattice basis must be square");
        n_ = basis.rows();
        snf_ = smith_normal_form(basis);
        order_ = 1;
        for (int i = 0; i < n_; ++i) {
            Int di = snf_.d.at(i, i);
            if (di == 0) throw Error("quotient lattice is not full rank");
            order_ *= di;
            if (di > 1) nontrivial_.push_back(i);
        }
    }

    int ambient_dim() const { return n_; }
    const Int& order() const { return order_; }

    /// Cyclic factor orders of the nontrivial coordinates (divisibility chain).
    std::vector<Int> factors() const {
        std::vector<Int> f;
        for (int i : nontrivial_) f.push_back(snf_.d.at(i, i));
        return f;
    }

    int coord_count() const { return static_cast<int>(nontrivial_.size()); }

    /// Coordinates of the class of z, each reduced into [0, d_i).
    std::vector<Int> coords(const std::vector<Int>& z) const {
        std::vector<Int> uz = snf_.u.apply(z);
        std::vector<Int> c(nontrivial_.size());
        for (std::size_t k = 0; k < nontrivial_.size(); ++k) {
            Int d = snf_.d.at(nontrivial_[k], nontrivial_[k]);
            Int r = uz[nontrivial_[k]] % d;
            if (r < 0) r += d;
            c[k] = r;
        }
        return c;
    }

    /// Canonical ambient representative of a coordinate tuple.
    std::vector<Int> lift(const std::vector<Int>& c) const {
        if (static_cast<int>(c.size()) != coord_count()) throw DimensionMismatch("quotient coords length");
        std::vector<Int> full(n_, Int(0));
        for (std::size_t k = 0; k < nontrivial_.size(); ++k) {
            Int d = snf_.d.at(nontrivial_[k], nontrivial_[k]);
            Int r = c[k] % d;
            if (r < 0) r += d;
            full[nontrivial_[k]] = r;
        }
        return snf_.uinv.apply(full);
    }

    /// Canonical representative of the class of z.
    std::vector<Int> canonical(const std::vector<Int>& z) const { return lift(coords(z)); }

    bool is_zero_class(const std::vector<Int>& z) const {
        for (const Int& c : coords(z))
            if (c != 0) return false;
        return true;
    }

  private:
    int n_ = 0;
    SmithForm snf_;
    Int order_ = 1;
    std::vector<int> nontrivial_;
};

/// Subgroup of Z^N / L0, represented as the intermediate lattice
/// L0 <= L <= Z^N spanned by the given generators together with L0.
/// The canonical row HNF makes equality and membership exact.
class FinSubgroup {
  public:
    FinSubgroup() = default;

    /// gens: columns are ambient vectors; relations: columns span L0.
    FinSubgroup(const ZMat& gens, const ZMat& relations) {
        if (gens.rows() != relations.rows()) throw DimensionMismatch("subgroup ambient size");
        n_ = gens.rows();
        ZMat all = ZMat::hcat(gens, relations);
        hnf_ = hnf_rows(all.transpose());
        if (hnf_.rows() != n_) throw Error("subgroup lattice is not full rank");
    }

    int ambient_dim() const { return n_; }

    /// Basis of the lattice as columns (transposed canonical HNF).
    ZMat basis_columns() const { return hnf_.transpose(); }

    /// det of the lattice; |subgroup| = det(L0) / det(L). The HNF of a
    /// full-rank square lattice is upper triangular with positive diagonal.
    Int lattice_det() const {
        Int d = 1;
        for (int i = 0; i < n_; ++i) d *= hnf_.at(i, i);
        return d;
    }

    Int order_in(const Int& relations_det) const {
        Int ld = lattice_det();
        if (relations_det % ld != 0) throw Error("subgroup order is not integral");
        return relations_det / ld;
    }

    /// Ambient vector membership in the lattice, by back-substitution.
    bool contains(const std::vector<Int>& v) const {
        std::vector<Int> w = v;
        for (int i = 0; i < n_; ++i) {
            Int p = hnf_.at(i, i);
            if (w[i] % p != 0) return false;
            Int q = w[i] / p;
            if (q != 0)
                for (int j = i; j < n_; ++j) w[j] -= q * hnf_.at(i, j);
        }
        return true;
    }

    bool contains_subgroup(const FinSubgroup& other) const {
        ZMat b = other.basis_columns();
        for (int j = 0; j < b.cols(); ++j)
            if (!contains(b.column(j))) return false;
        return true;
    }

    friend bool operator==(const FinSubgroup& a, const FinSubgroup& b) { return a.hnf_ == b.hnf_; }
    friend bool operator!=(const FinSubgroup& a, const FinSubgroup& b) { return !(a == b); }

    /// Invariant factors (> 1) of L / L0rel where L0rel is spanned by the
    /// columns of relations; requires L0rel <= L.
    std::vector<Int> invariant_factors(const ZMat& relations) const {
        ZMat b = basis_columns();
        ZMat x(b.cols(), relations.cols());
        for (int j = 0; j < relations.cols(); ++j) {
            auto sol = solve_integer(b, relations.column(j));
            if (!sol) throw Error("relations do not lie inside the subgroup lattice");
            for (int i = 0; i < b.cols(); ++i) x.at(i, j) = (*sol)[i];
        }
        SmithForm s = smith_normal_form(x);
        std::vector<Int> f;
        for (const Int& d : s.diagonal())
            if (d > 1) f.push_back(d);
        return f;
    }

  private:
    int n_ = 0;
    ZMat hnf_;  // canonical row HNF of the lattice
};

/// Sum of subgroups (lattice sum).
inline FinSubgroup subgroup_sum(const FinSubgroup& a, const FinSubgroup& b) {
    return FinSubgroup(ZMat::hcat(a.basis_columns(), b.basis_columns()), ZMat(a.ambient_dim(), 0));
}

/// Intersection of subgroups (lattice intersection).
inline FinSubgroup subgroup_intersection(const FinSubgroup& a, const FinSubgroup& b) {
    ZMat meet = lattice_intersection(a.basis_columns(), b.basis_columns());
    return FinSubgroup(meet, ZMat(a.ambient_dim(), 0));
}

}  // namespace stabring
