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

#include "stabring/linking_form.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace stabring {

LinkingForm LinkingForm::validate(Presentation carrier, RatPolyMatrix gram, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw Error("epsilon must be +1 or -1");
    if (gram.rows() != gram.cols() || gram.rows() != carrier.size() || gram.dim() != carrier.dim())
        throw DimensionMismatch("gram matrix shape");

    RatPolyMatrix boundary = to_rational(carrier.boundary());
    if (!is_integral(gram * boundary))
        throw IllDefined("gram * boundary has fractional entries");
    if (!is_integral(boundary.conjugate_transpose() * gram))
        throw IllDefined("conj-transpose(boundary) * gram has fractional entries");

    RatPolyMatrix herm_defect = gram.conjugate_transpose();
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            herm_defect.at(i, j) -= Rat(epsilon) * gram.at(i, j);
    if (!is_integral(herm_defect)) throw NotHermitian("conj-transpose(gram) != eps * gram mod Z");

    LinkingForm f;
    f.carrier_ = std::move(carrier);
    f.gram_ = std::move(gram);
    f.epsilon_ = epsilon;
    return f;
}

LinkingForm validate_form(Presentation carrier, RatPolyMatrix gram, int epsilon) {
    return LinkingForm::validate(std::move(carrier), std::move(gram), epsilon);
}

RatPoly LinkingForm::pairing_lift(const std::vector<IntPoly>& x, const std::vector<IntPoly>& y) const {
    if (static_cast<int>(x.size()) != size() || static_cast<int>(y.size()) != size())
        throw DimensionMismatch("pairing vector length");
    RatPoly acc(dim());
    for (int i = 0; i < size(); ++i) {
        if (x[i].is_zero()) continue;
        RatPoly xi = to_rational(x[i].involution());
        for (int j = 0; j < size(); ++j) {
            if (gram_.at(i, j).is_zero() || y[j].is_zero()) continue;
            acc += xi * gram_.at(i, j) * to_rational(y[j]);
        }
    }
    return acc;
}

PairingValue LinkingForm::eval_vectors(const std::vector<IntPoly>& x, const std::vector<IntPoly>& y) const {
    return PairingValue(pairing_lift(x, y));
}

PairingValue LinkingForm::eval(const ModuleElement& x, const ModuleElement& y) const {
    if (x.owner != carrier_ || y.owner != carrier_) throw OwnerMismatch("eval_pairing carrier");
    return eval_vectors(x.rep, y.rep);
}

RatMod1 LinkingForm::commutator_phase(const ModuleElement& x, const ModuleElement& y) const {
    return eval(x, y).trace();
}

bool LinkingForm::exactly_hermitian() const {
    RatPolyMatrix ct = gram_.conjugate_transpose();
    for (int i = 0; i < gram_.rows(); ++i)
        for (int j = 0; j < gram_.cols(); ++j)
            if (ct.at(i, j) != Rat(epsilon_) * gram_.at(i, j)) return false;
    return true;
}

namespace {

// adj(boundary) / det(boundary) as an exact rational matrix; the monomial
// unit of the determinant is absorbed into the entries.
RatPolyMatrix adj_over_det(const Presentation& p) {
    RatPolyMatrix r(p.size(), p.size(), p.dim());
    Monomial shift = p.unit_monomial().inverse();
    Rat scale = Rat(p.unit_sign(), p.k0());
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            RatPoly entry(p.dim());
            for (const auto& [m, c] : p.adjugate().at(i, j).terms()) entry.add_term(m * shift, Rat(c) * scale);
            r.at(i, j) = entry;
        }
    return r;
}

}  // namespace

LinkingForm standard_form(const Presentation& m, int epsilon) {
    Presentation dual = m.s_dual();
    Presentation carrier = direct_sum(m, dual);
    int n = m.size();
    RatPolyMatrix gram(2 * n, 2 * n, m.dim());
    RatPolyMatrix eval = adj_over_det(m);           // pairs the dual block against the module block
    RatPolyMatrix eval_ct = eval.conjugate_transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            gram.at(n + i, j) = eval.at(i, j);
            gram.at(i, n + j) = Rat(epsilon) * eval_ct.at(i, j);
        }
    return LinkingForm::validate(std::move(carrier), std::move(gram), epsilon);
}

LinkingForm orthogonal_sum(const LinkingForm& a, const LinkingForm& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("orthogonal_sum dimensions");
    if (a.epsilon() != b.epsilon()) throw Error("orthogonal_sum needs equal epsilon");
    Presentation carrier = direct_sum(a.carrier(), b.carrier());
    int na = a.size(), nb = b.size();
    RatPolyMatrix gram(na + nb, na + nb, a.dim());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) gram.at(i, j) = a.gram().at(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) gram.at(na + i, na + j) = b.gram().at(i, j);
    return LinkingForm::validate(std::move(carrier), std::move(gram), a.epsilon());
}

bool in_q_epsilon(const RatPoly& value, int epsilon) {
    RatPoly defect = value - Rat(epsilon) * value.involution();
    if (!is_integral(defect)) return false;
    if (epsilon == -1) {
        // b + conj(b) must be a + conj(a): self-conjugate, integral, with
        // even constant coefficient
        Rat c = defect.trace();
        return num(c) % 2 == 0;
    }
    return true;
}

bool is_even(const LinkingForm& form, const std::vector<std::vector<IntPoly>>& generators) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != form.size()) throw DimensionMismatch("is_even generator length");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!in_q_epsilon(form.pairing_lift(generators[i], generators[i]), form.epsilon())) return false;
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            std::vector<IntPoly> sum(form.size(), IntPoly(form.dim()));
            for (int k = 0; k < form.size(); ++k) sum[k] = generators[i][k] + generators[j][k];
            if (!in_q_epsilon(form.pairing_lift(sum, sum), form.epsilon())) return false;
        }
    }
    return true;
}

bool is_even(const LinkingForm& form) {
    std::vector<std::vector<IntPoly>> gens;
    for (int i = 0; i < form.size(); ++i) {
        std::vector<IntPoly> e(form.size(), IntPoly(form.dim()));
        e[i] = IntPoly::constant(form.dim(), 1);
        gens.push_back(std::move(e));
    }
    return is_even(form, gens);
}

CompactPairing::CompactPairing(const LinkingForm& form, long ell, const Limits& limits)
    : form_(form), module_(form.carrier(), ell, limits) {
    exponent_ = 1;
    for (const Int& f : module_.quotient().factors())
        exponent_ = boost::multiprecision::lcm(exponent_, f);
}

Rat CompactPairing::lift(const std::vector<Int>& z1, const std::vector<Int>& z2) const {
    std::vector<IntPoly> x = module_.unflatten(z1);
    std::vector<IntPoly> y = module_.unflatten(z2);
    RatPoly value = reduce_mod_torus_poly(form_.pairing_lift(x, y), module_.ell());
    return value.trace();
}

FinSubgroup CompactPairing::annihilator(const ZMat& generator_columns) const {
    const int ambient = module_.ambient_dim();
    if (generator_columns.rows() != ambient) throw DimensionMismatch("annihilator generators");
    const Int& n = exponent_;
    if (n == 1) return module_.full_group();

    // rows: one constraint per generator; n * phase is integral because n
    // annihilates the carrier
    const int rows = generator_columns.cols();
    ZMat constraints(rows, ambient);
    for (int h = 0; h < rows; ++h) {
        std::vector<Int> g = generator_columns.column(h);
        for (int k = 0; k < ambient; ++k) {
            std::vector<Int> basis(ambient, Int(0));
            basis[k] = 1;
            Rat v = Rat(n) * lift(g, basis);
            if (!is_integer(v)) throw Error("pairing exponent does not clear denominators");
            Int m = num(v) % n;
            if (m < 0) m += n;
            constraints.at(h, k) = m;
        }
    }

    // solution lattice of (constraints) z = 0 mod n
    SmithForm s = smith_normal_form(constraints);
    ZMat basis(ambient, ambient);
    for (int j = 0; j < ambient; ++j) {
        Int t = 1;
        if (j < s.rank) {
            Int d = s.d.at(j, j);
            t = n / boost::multiprecision::gcd(d, n);
        }
        for (int i = 0; i < ambient; ++i) basis.at(i, j) = s.v.at(i, j) * t;
    }
    return FinSubgroup(basis, module_.relation_matrix());
}

FinSubgroup CompactPairing::radical() const {
    return annihilator(ZMat::identity(module_.ambient_dim()));
}

NonsingularResult nonsingular_check(const LinkingForm& form, const std::vector<long>& ell_list,
                                    const Limits& limits) {
    if (form.dim() == 0) {
        CompactPairing cp(form, 1, limits);
        bool ok = cp.radical().order_in(cp.module().relations_det()) == 1;
        if (ok) return {NonsingularResult::Status::CertifiedD0, 0};
        return {NonsingularResult::Status::FalsifiedAt, 1};
    }
    for (long ell : ell_list) {
        CompactPairing cp(form, ell, limits);
        if (cp.radical().order_in(cp.module().relations_det()) != 1)
            return {NonsingularResult::Status::FalsifiedAt, ell};
    }
    return {NonsingularResult::Status::PassedFiniteChecks, 0};
}

}  // namespace stabring
