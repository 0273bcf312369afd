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

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stabring/errors.hpp"
#include "stabring/numbers.hpp"

namespace stabring {

/// A monomial x1^e1 ... xd^ed of the Laurent ring in d variables.
/// d = 0 is the constant monomial. Ordered lexicographically on exponents,
/// which is the canonical printing order everywhere.
struct Monomial {
    std::vector<std::int64_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> e) : exps(std::move(e)) {}

    static Monomial one(int dim) { return Monomial(std::vector<std::int64_t>(dim, 0)); }

    int dim() const { return static_cast<int>(exps.size()); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::int64_t e) { return e == 0; });
    }

    Monomial inverse() const {
        Monomial m = *this;
        for (auto& e : m.exps) e = -e;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.dim() != b.dim()) throw DimensionMismatch("monomial product");
        Monomial m = a;
        for (int i = 0; i < b.dim(); ++i) m.exps[i] += b.exps[i];
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps != b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

namespace detail {
inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const RatMod1& c) { return c.is_zero(); }
inline Int coeff_canonical(const Int& c) { return c; }
inline Rat coeff_canonical(const Rat& c) { return c; }
inline RatMod1 coeff_canonical(const RatMod1& c) { return c; }
}  // namespace detail

/// Sparse Laurent polynomial with exact coefficients. Zero coefficients are
/// never stored, so equality of maps is equality of ring elements.
template <typename C>
class LaurentPoly {
  public:
    LaurentPoly() : dim_(0) {}
    explicit LaurentPoly(int dim) : dim_(dim) {}

    static LaurentPoly zero(int dim) { return LaurentPoly(dim); }

    static LaurentPoly constant(int dim, C value) {
        LaurentPoly p(dim);
        p.set(Monomial::one(dim), std::move(value));
        return p;
    }

    static LaurentPoly term(Monomial m, C value) {
        LaurentPoly p(m.dim());
        p.set(std::move(m), std::move(value));
        return p;
    }

    // x_{var}^{exp}, var being 0-based.
    static LaurentPoly variable(int dim, int var, std::int64_t exp = 1) {
        if (var < 0 || var >= dim) throw Error("variable index out of range");
        Monomial m = Monomial::one(dim);
        m.exps[var] = exp;
        return term(std::move(m), C(1));
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, C>& terms() const { return terms_; }

    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void set(Monomial m, C value) {
        if (m.dim() != dim_) throw DimensionMismatch("monomial dimension in set()");
        value = detail::coeff_canonical(value);
        if (detail::coeff_is_zero(value)) {
            terms_.erase(m);
        } else {
            terms_[std::move(m)] = std::move(value);
        }
    }

    void add_term(const Monomial& m, const C& value) {
        if (m.dim() != dim_) throw DimensionMismatch("monomial dimension in add_term()");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            C v = detail::coeff_canonical(value);
            if (!detail::coeff_is_zero(v)) terms_.emplace(m, std::move(v));
        } else {
            it->second = detail::coeff_canonical(C(it->second + value));
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    /// The constant-monomial coefficient; the trace map of the ring.
    C trace() const { return coeff(Monomial::one(dim_)); }

    /// Image under the involution x_i -> x_i^{-1}; coefficients untouched.
    LaurentPoly involution() const {
        LaurentPoly p(dim_);
        for (const auto& [m, c] : terms_) p.set(m.inverse(), c);
        return p;
    }

    /// True when the polynomial is a single term c * x^alpha.
    bool is_single_term() const { return terms_.size() == 1; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_dim(a, b);
        LaurentPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_dim(a, b);
        LaurentPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, C(-c));
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.dim_);
        for (const auto& [m, c] : a.terms_) r.set(m, C(-c));
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_dim(a, b);
        LaurentPoly r(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, C(ca * cb));
        return r;
    }

    friend LaurentPoly operator*(const C& s, const LaurentPoly& a) {
        LaurentPoly r(a.dim_);
        for (const auto& [m, c] : a.terms_) r.set(m, C(s * c));
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Canonical text form in the shared grammar, e.g. "2*x1^-1*x2 + 3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                os << (neg ? "-" : "");
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mag = neg ? cs.substr(1) : cs;
            std::string ms = monomial_str(m);
            if (ms.empty()) {
                os << mag;
            } else if (mag == "1") {
                os << ms;
            } else {
                os << mag << "*" << ms;
            }
        }
        return os.str();
    }

  private:
    static void check_same_dim(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch("laurent polynomial arithmetic");
    }

    static std::string coeff_str(const Int& c) { return c.str(); }
    static std::string coeff_str(const Rat& c) { return to_string(c); }
    static std::string coeff_str(const RatMod1& c) { return to_string(c.v); }

    static std::string monomial_str(const Monomial& m) {
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < m.dim(); ++i) {
            if (m.exps[i] == 0) continue;
            if (any) os << "*";
            os << "x" << (i + 1);
            if (m.exps[i] != 1) os << "^" << m.exps[i];
            any = true;
        }
        return os.str();
    }

    int dim_;
    std::map<Monomial, C> terms_;
};

using IntPoly = LaurentPoly<Int>;
using RatPoly = LaurentPoly<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    RatPoly r(p.dim());
    for (const auto& [m, c] : p.terms()) r.set(m, Rat(c));
    return r;
}

inline bool is_integral(const RatPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!is_integer(c)) return false;
    return true;
}

/// Reduces every coefficient into [0, 1); the canonical representative of a
/// class in Q/Z[x1^±1, ..., xd^±1] = S^{-1}R/R.
inline RatPoly normalize_mod_one(const RatPoly& p) {
    RatPoly r(p.dim());
    for (const auto& [m, c] : p.terms()) r.set(m, mod_one(c));
    return r;
}

inline RatMod1 trace_mod_one(const RatPoly& p) { return RatMod1(p.trace()); }

/// Exact division of an integer-coefficient polynomial by a single term
/// c * x^alpha. Throws when some coefficient is not divisible by c.
inline IntPoly divexact_by_term(const IntPoly& p, const Int& c, const Monomial& alpha) {
    if (c == 0) throw Error("division by zero term");
    IntPoly r(p.dim());
    Monomial inv = alpha.inverse();
    for (const auto& [m, v] : p.terms()) {
        if (v % c != 0) throw Error("coefficient not divisible in divexact_by_term");
        r.set(m * inv, Int(v / c));
    }
    return r;
}

/// Exact division f / g over Z[x1^±1, ...]; requires g | f (the Bareiss
/// elimination guarantees this at every step it is used). Cancels leading
/// terms in lexicographic order; the loop shrinks the quotient one term per
/// round, so termination is bounded by the quotient's term count.
inline IntPoly divexact(const IntPoly& f, const IntPoly& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("divexact");
    if (g.is_zero()) throw Error("division by zero polynomial");
    IntPoly rem = f;
    IntPoly quot(f.dim());
    const auto& gt = *g.terms().rbegin();  // lex-leading term of g
    std::size_t guard = f.term_count() * g.term_count() + f.term_count() + 16;
    while (!rem.is_zero()) {
        if (guard-- == 0) throw Error("divexact did not terminate; inputs not divisible");
        const auto& rt = *rem.terms().rbegin();
        if (rt.second % gt.second != 0) throw Error("divexact: leading coefficient not divisible");
        Int qc = rt.second / gt.second;
        Monomial qm = rt.first * gt.first.inverse();
        IntPoly t = IntPoly::term(qm, qc);
        quot += t;
        rem -= t * g;
    }
    return quot;
}

/// Element of the quotient ring R_ell = R / (x1^ell - 1, ..., xd^ell - 1):
/// a polynomial whose exponents all lie in [0, ell).
struct TorusRingElem {
    IntPoly base;
    long ell = 1;
};

namespace detail {
inline Monomial reduce_monomial(const Monomial& m, long ell) {
    Monomial r = m;
    for (auto& e : r.exps) {
        e %= ell;
        if (e < 0) e += ell;
    }
    return r;
}
}  // namespace detail

/// Reduction mod the torus ideal: exponents wrap mod ell, colliding
/// monomials sum. A ring homomorphism R -> R_ell.
template <typename C>
LaurentPoly<C> reduce_mod_torus_poly(const LaurentPoly<C>& p, long ell) {
    if (ell <= 0) throw Error("torus length must be positive");
    LaurentPoly<C> r(p.dim());
    for (const auto& [m, c] : p.terms()) r.add_term(detail::reduce_monomial(m, ell), c);
    return r;
}

inline TorusRingElem reduce_mod_torus(const IntPoly& p, long ell) {
    return TorusRingElem{reduce_mod_torus_poly(p, ell), ell};
}

inline TorusRingElem torus_mul(const TorusRingElem& a, const TorusRingElem& b) {
    if (a.ell != b.ell) throw DimensionMismatch("torus lengths differ");
    return TorusRingElem{reduce_mod_torus_poly(a.base * b.base, a.ell), a.ell};
}

inline TorusRingElem torus_add(const TorusRingElem& a, const TorusRingElem& b) {
    if (a.ell != b.ell) throw DimensionMismatch("torus lengths differ");
    return TorusRingElem{a.base + b.base, a.ell};
}

/// Involution on the torus ring; x^e -> x^{ell - e} since x^ell = 1.
inline TorusRingElem torus_involution(const TorusRingElem& a) {
    return TorusRingElem{reduce_mod_torus_poly(a.base.involution(), a.ell), a.ell};
}

}  // namespace stabring
