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

#include <utility>
#include <vector>

#include "stabring/laurent.hpp"

namespace stabring {

/// Dense rectangular matrix over the Laurent ring. Entry dimensions agree
/// with the matrix dimension d (the number of lattice variables).
template <typename C>
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0), dim_(0) {}

    PolyMatrix(int rows, int cols, int dim)
        : rows_(rows), cols_(cols), dim_(dim), entries_(static_cast<std::size_t>(rows) * cols, LaurentPoly<C>(dim)) {}

    static PolyMatrix identity(int n, int dim) {
        PolyMatrix m(n, n, dim);
        for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly<C>::constant(dim, C(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dim() const { return dim_; }

    LaurentPoly<C>& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPoly<C>& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        a.check_shape(b);
        PolyMatrix r = a;
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
        return r;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        a.check_shape(b);
        PolyMatrix r = a;
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_ || a.dim_ != b.dim_) throw DimensionMismatch("matrix product");
        PolyMatrix r(a.rows_, b.cols_, a.dim_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    std::vector<LaurentPoly<C>> apply(const std::vector<LaurentPoly<C>>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product");
        std::vector<LaurentPoly<C>> r(rows_, LaurentPoly<C>(dim_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    PolyMatrix transpose() const {
        PolyMatrix r(cols_, rows_, dim_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Transpose with the involution applied entrywise.
    PolyMatrix conjugate_transpose() const {
        PolyMatrix r(cols_, rows_, dim_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involution();
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

  private:
    void check_shape(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || dim_ != o.dim_) throw DimensionMismatch("matrix shapes");
    }

    int rows_, cols_, dim_;
    std::vector<LaurentPoly<C>> entries_;
};

using IntPolyMatrix = PolyMatrix<Int>;
using RatPolyMatrix = PolyMatrix<Rat>;

inline RatPolyMatrix to_rational(const IntPolyMatrix& m) {
    RatPolyMatrix r(m.rows(), m.cols(), m.dim());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = to_rational(m.at(i, j));
    return r;
}

inline bool is_integral(const RatPolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_integral(m.at(i, j))) return false;
    return true;
}

/// Fraction-free Bareiss determinant over the Laurent ring. Every division
/// is exact by the Bareiss identity; pivots are chosen to minimize term
/// count. Works for any square size; the cofactor route below stays within
/// small matrices only.
inline IntPoly poly_det(const IntPolyMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
    int n = a.rows();
    int d = a.dim();
    if (n == 0) return IntPoly::constant(d, 1);

    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);

    int sign = 1;
    IntPoly prev = IntPoly::constant(d, 1);
    for (int k = 0; k < n - 1; ++k) {
        // pivot with the fewest terms to limit growth
        int piv = -1;
        std::size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (piv < 0 || m[i][k].term_count() < best) {
                piv = i;
                best = m[i][k].term_count();
            }
        }
        if (piv < 0) return IntPoly(d);  // singular
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(num, prev);
            }
            m[i][k] = IntPoly(d);
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

namespace detail {
inline IntPolyMatrix minor_matrix(const IntPolyMatrix& a, int row, int col) {
    IntPolyMatrix m(a.rows() - 1, a.cols() - 1, a.dim());
    int mi = 0;
    for (int i = 0; i < a.rows(); ++i) {
        if (i == row) continue;
        int mj = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (j == col) continue;
            m.at(mi, mj) = a.at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}
}  // namespace detail

/// Exact determinant and adjugate, A * adj(A) = det(A) * I. The adjugate is
/// assembled from cofactors, each a Bareiss determinant of a minor.
inline std::pair<IntPoly, IntPolyMatrix> poly_det_adjugate(const IntPolyMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("adjugate of non-square matrix");
    int n = a.rows();
    int d = a.dim();
    if (n == 0) return {IntPoly::constant(d, 1), IntPolyMatrix(0, 0, d)};
    if (n == 1) return {a.at(0, 0), IntPolyMatrix::identity(1, d)};

    IntPolyMatrix adj(n, n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly c = poly_det(detail::minor_matrix(a, i, j));
            if ((i + j) % 2 != 0) c = -c;
            adj.at(j, i) = c;  // transpose of the cofactor matrix
        }
    return {poly_det(a), adj};
}

}  // namespace stabring
