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
#include <vector>

#include "stabring/numbers.hpp"

namespace stabring {

/// Dense matrix over Z with arbitrary-precision entries.
class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Int(0)) {}

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static ZMat diagonal(const std::vector<Int>& d) {
        ZMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    static ZMat from_columns(const std::vector<std::vector<Int>>& cols, int rows) {
        ZMat m(rows, static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols_; ++j) {
            if (static_cast<int>(cols[j].size()) != rows) throw DimensionMismatch("column length");
            for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Int> column(int c) const {
        std::vector<Int> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    std::vector<Int> row(int r) const {
        std::vector<Int> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
        return v;
    }

    ZMat transpose() const {
        ZMat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    /// Horizontal concatenation [A | B].
    static ZMat hcat(const ZMat& a, const ZMat& b) {
        if (a.rows_ != b.rows_) throw DimensionMismatch("hcat");
        ZMat m(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
        }
        return m;
    }

    friend ZMat operator*(const ZMat& a, const ZMat& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("zmat product");
        ZMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("zmat apply");
        std::vector<Int> r(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const ZMat& a, const ZMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ZMat& a, const ZMat& b) { return !(a == b); }

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

/// U * A * V = D with U, V unimodular and D diagonal with a divisibility
/// chain d1 | d2 | ... ; the inverses are accumulated alongside so that
/// coordinates can be both projected and lifted exactly.
struct SmithForm {
    ZMat d;
    ZMat u, uinv;
    ZMat v, vinv;
    int rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> r;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i) r.push_back(d.at(i, i));
        return r;
    }
};

namespace zdetail {

inline void row_swap(ZMat& m, int i, int j) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}
inline void col_swap(ZMat& m, int i, int j) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
inline void row_negate(ZMat& m, int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}
inline void col_negate(ZMat& m, int i) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) = -m.at(r, i);
}
// row_i += k * row_j
inline void row_addmul(ZMat& m, int i, int j, const Int& k) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) += k * m.at(j, c);
}
// col_i += k * col_j
inline void col_addmul(ZMat& m, int i, int j, const Int& k) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) += k * m.at(r, j);
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division: the remainder v - q*d lies in [0, |d|).
inline Int floor_div(const Int& v, const Int& d) {
    Int q = v / d;
    if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
    return q;
}

}  // namespace zdetail

inline SmithForm smith_normal_form(ZMat a) {
    using namespace zdetail;
    const int m = a.rows(), n = a.cols();
    SmithForm s;
    s.u = ZMat::identity(m);
    s.uinv = ZMat::identity(m);
    s.v = ZMat::identity(n);
    s.vinv = ZMat::identity(n);

    auto do_row_swap = [&](int i, int j) {
        row_swap(a, i, j);
        row_swap(s.u, i, j);
        col_swap(s.uinv, i, j);
    };
    auto do_col_swap = [&](int i, int j) {
        col_swap(a, i, j);
        col_swap(s.v, i, j);
        row_swap(s.vinv, i, j);
    };
    auto do_row_addmul = [&](int i, int j, const Int& k) {
        row_addmul(a, i, j, k);
        row_addmul(s.u, i, j, k);
        col_addmul(s.uinv, j, i, Int(-k));
    };
    auto do_col_addmul = [&](int i, int j, const Int& k) {
        col_addmul(a, i, j, k);
        col_addmul(s.v, i, j, k);
        row_addmul(s.vinv, j, i, Int(-k));
    };
    auto do_row_negate = [&](int i) {
        row_negate(a, i);
        row_negate(s.u, i);
        col_negate(s.uinv, i);
    };

    const int steps = std::min(m, n);
    for (int k = 0; k < steps; ++k) {
        // pivot: smallest nonzero absolute value in the trailing block
        while (true) {
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j) {
                    if (a.at(i, j) == 0) continue;
                    Int v = abs_int(a.at(i, j));
                    if (pi < 0 || v < best) {
                        pi = i;
                        pj = j;
                        best = v;
                    }
                }
            if (pi < 0) break;  // trailing block zero, done at this k
            if (pi != k) do_row_swap(k, pi);
            if (pj != k) do_col_swap(k, pj);

            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                if (a.at(i, k) == 0) continue;
                Int q = a.at(i, k) / a.at(k, k);
                do_row_addmul(i, k, Int(-q));
                if (a.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (a.at(k, j) == 0) continue;
                Int q = a.at(k, j) / a.at(k, k);
                do_col_addmul(j, k, Int(-q));
                if (a.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // enforce divisibility of the trailing block by the pivot
            int bi = -1, bj = -1;
            for (int i = k + 1; i < m && bi < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            do_row_addmul(k, bi, Int(1));
            (void)bj;
        }
        if (a.at(k, k) < 0) do_row_negate(k);
        if (a.at(k, k) != 0) s.rank = k + 1;
    }
    s.d = a;
    return s;
}

/// Canonical row-style Hermite normal form: echelon rows, positive pivots,
/// entries above each pivot reduced into [0, pivot). Unique for the row
/// lattice, so two integer lattices are equal iff their HNFs are equal.
inline ZMat hnf_rows(ZMat a) {
    using namespace zdetail;
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // Euclidean elimination in column c among rows >= r
        while (true) {
            int piv = -1;
            Int best;
            for (int i = r; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int v = abs_int(a.at(i, c));
                if (piv < 0 || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;
            if (piv != r) row_swap(a, r, piv);
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = a.at(i, c) / a.at(r, c);
                row_addmul(a, i, r, Int(-q));
                if (a.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) row_negate(a, r);
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(a.at(i, c), a.at(r, c));
            if (q != 0) row_addmul(a, i, r, Int(-q));
        }
        ++r;
    }
    // drop zero rows
    ZMat h(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = a.at(i, j);
    return h;
}

/// Integer determinant by fraction-free elimination.
inline Int zmat_det(const ZMat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square zmat");
    int n = a.rows();
    if (n == 0) return 1;
    ZMat m = a;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            zdetail::row_swap(m, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

/// Solves A x = b over the integers; nullopt when no integral solution.
inline std::optional<std::vector<Int>> solve_integer(const ZMat& a, const std::vector<Int>& b) {
    SmithForm s = smith_normal_form(a);
    std::vector<Int> ub = s.u.apply(b);
    std::vector<Int> y(a.cols(), Int(0));
    for (int i = 0; i < a.rows(); ++i) {
        Int di = (i < std::min(a.rows(), a.cols())) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            if (i < a.cols()) y[i] = ub[i] / di;
        }
    }
    return s.v.apply(y);
}

/// Basis of { x : A x = 0 } as columns.
inline ZMat integer_kernel(const ZMat& a) {
    SmithForm s = smith_normal_form(a);
    int n = a.cols();
    int free_cols = n - s.rank;
    ZMat k(n, free_cols);
    for (int j = 0; j < free_cols; ++j)
        for (int i = 0; i < n; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
    return k;
}

/// Basis (as columns) of the intersection of the column lattices of A and B.
inline ZMat lattice_intersection(const ZMat& a, const ZMat& b) {
    // x = A u = B w; solve [A | -B] (u, w) = 0, image under A of the u-part.
    ZMat neg_b = b;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) neg_b.at(i, j) = -b.at(i, j);
    ZMat combined = ZMat::hcat(a, neg_b);
    ZMat ker = integer_kernel(combined);
    ZMat result(a.rows(), ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        std::vector<Int> u(a.cols());
        for (int i = 0; i < a.cols(); ++i) u[i] = ker.at(i, j);
        std::vector<Int> x = a.apply(u);
        for (int i = 0; i < a.rows(); ++i) result.at(i, j) = x[i];
    }
    return result;
}

}  // namespace stabring
