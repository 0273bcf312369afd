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

#include "stabring/formation.hpp"

namespace stabring {

Submodule Submodule::from_columns(const std::vector<std::vector<IntPoly>>& cols, int rows, int dim) {
    Submodule s;
    s.generators = IntPolyMatrix(rows, static_cast<int>(cols.size()), dim);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw DimensionMismatch("submodule generator length");
        for (int i = 0; i < rows; ++i) s.generators.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return s;
}

bool is_isotropic(const LinkingForm& form, const Submodule& s) {
    if (s.generators.rows() != form.size()) throw OwnerMismatch("is_isotropic ambient");
    for (int i = 0; i < s.generator_count(); ++i)
        for (int j = 0; j < s.generator_count(); ++j) {
            RatPoly v = form.pairing_lift(s.generator(i), s.generator(j));
            if (!is_integral(v)) return false;
        }
    return true;
}

namespace {

ZMat translate_columns(const CompactifiedModule& mod, const Submodule& s) {
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < s.generator_count(); ++j)
        for (const Monomial& site : mod.site_monomials())
            cols.push_back(mod.flatten_translate(s.generator(j), site));
    return ZMat::from_columns(cols, mod.ambient_dim());
}

FinSubgroup submodule_group(const CompactifiedModule& mod, const Submodule& s) {
    return FinSubgroup(translate_columns(mod, s), mod.relation_matrix());
}

}  // namespace

FinSubgroup annihilator_finite(const LinkingForm& form, const Submodule& s, long ell, const Int& n,
                               const Limits& limits) {
    CompactPairing cp(form, ell, limits);
    if (n <= 0 || n % cp.exponent() != 0)
        throw Error("n = " + n.str() + " does not annihilate the compactified carrier");
    return cp.annihilator(translate_columns(cp.module(), s));
}

Formation Formation::validate(LinkingForm form, Submodule m, Submodule f, std::vector<long> ell_checks,
                              const Limits& limits) {
    if (m.generators.rows() != form.size() || f.generators.rows() != form.size())
        throw OwnerMismatch("formation submodule ambient");
    if (!is_even(form)) throw Error("formation requires an even form");
    if (!is_isotropic(form, m)) throw Error("reference module M is not isotropic");
    if (!is_isotropic(form, f)) throw Error("stabilizer module F is not isotropic");

    // certify M as a lagrangian: exact at d = 0, finite tori otherwise
    std::vector<long> ells = form.dim() == 0 ? std::vector<long>{0} : ell_checks;
    for (long ell : ells) {
        CompactPairing cp(form, ell == 0 ? 1 : ell, limits);
        FinSubgroup m_fin = submodule_group(cp.module(), m);
        FinSubgroup m_perp = cp.annihilator(translate_columns(cp.module(), m));
        if (m_fin != m_perp)
            throw Error("reference module M is not a lagrangian (torus length " + std::to_string(ell) + ")");
    }

    Formation fm;
    fm.form_ = std::move(form);
    fm.m_ = std::move(m);
    fm.f_ = std::move(f);
    fm.m_certified_on_ = std::move(ells);
    return fm;
}

InvertibilityVerdict invertibility_check(const Formation& fm, const std::vector<long>& ell_list,
                                         std::optional<Int> n, const Limits& limits) {
    InvertibilityVerdict v;
    if (!is_isotropic(fm.form(), fm.f())) {
        v.status = InvertibilityVerdict::Status::Falsified;
        v.evidence.push_back("stabilizer module is not isotropic");
        return v;
    }
    v.evidence.push_back("isotropy: ok");

    std::vector<long> ells = fm.dim() == 0 ? std::vector<long>{1} : ell_list;
    for (long ell : ells) {
        CompactPairing cp(fm.form(), ell, limits);
        ZMat f_cols = translate_columns(cp.module(), fm.f());
        FinSubgroup f_fin(f_cols, cp.module().relation_matrix());
        FinSubgroup f_perp = cp.annihilator(f_cols);
        if (f_fin != f_perp) {
            Int det = cp.module().relations_det();
            Int index = f_perp.order_in(det) / f_fin.order_in(det);
            v.status = InvertibilityVerdict::Status::Falsified;
            v.evidence.push_back("annihilator mismatch at ell = " + std::to_string(ell) +
                                 ", |F_perp / F| = " + index.str());
            // concrete witness: a basis vector of F_perp outside F
            ZMat basis = f_perp.basis_columns();
            for (int j = 0; j < basis.cols(); ++j) {
                if (!f_fin.contains(basis.column(j))) {
                    v.witness = cp.module().unflatten(basis.column(j));
                    v.witness_ell = ell;
                    break;
                }
            }
            return v;
        }
        v.evidence.push_back("F_perp = F at ell = " + std::to_string(ell));

        if (fm.f_certificate) {
            auto cert = compactify(*fm.f_certificate, ell, limits);
            if (cert.invariant_factors != f_fin.invariant_factors(cp.module().relation_matrix()))
                throw Error("inconsistent certificate for F at ell = " + std::to_string(ell));
            v.evidence.push_back("F certificate consistent at ell = " + std::to_string(ell));
        }
        if (fm.quotient_certificate) {
            auto cert = compactify(*fm.quotient_certificate, ell, limits);
            QuotientSystem qf(f_fin.basis_columns());
            if (cert.invariant_factors != qf.factors())
                throw Error("inconsistent certificate for P/F at ell = " + std::to_string(ell));
            v.evidence.push_back("P/F certificate consistent at ell = " + std::to_string(ell));
        }
    }

    if (fm.dim() == 0) {
        CompactPairing cp(fm.form(), 1, limits);
        Int ann = n ? *n : cp.exponent();
        if (ann == 0 || ann % cp.exponent() != 0) throw Error("supplied n does not annihilate the carrier");
        FinSubgroup f_fin = submodule_group(cp.module(), fm.f());
        auto f_factors = f_fin.invariant_factors(cp.module().relation_matrix());
        auto q_factors = QuotientSystem(f_fin.basis_columns()).factors();
        ExtReport ext_f = ext_charges_d0(f_factors, ann == 1 ? Int(1) : ann);
        ExtReport ext_q = ext_charges_d0(q_factors, ann == 1 ? Int(1) : ann);
        if (!ext_f.all_vanish || !ext_q.all_vanish) {
            v.status = InvertibilityVerdict::Status::Falsified;
            v.evidence.push_back("nonzero Ext charge at d = 0");
            return v;
        }
        v.evidence.push_back("d = 0 Ext charges vanish for F and P/F");
        v.status = InvertibilityVerdict::Status::CertifiedInvertible;
        return v;
    }

    v.status = InvertibilityVerdict::Status::PassedFiniteChecks;
    return v;
}

Formation stack(const Formation& a, const Formation& b) {
    LinkingForm form = orthogonal_sum(a.form(), b.form());
    int na = a.form().size(), nb = b.form().size();
    int dim = a.dim();

    auto stack_subs = [&](const Submodule& sa, const Submodule& sb) {
        Submodule s;
        s.generators = IntPolyMatrix(na + nb, sa.generator_count() + sb.generator_count(), dim);
        for (int j = 0; j < sa.generator_count(); ++j)
            for (int i = 0; i < na; ++i) s.generators.at(i, j) = sa.generators.at(i, j);
        for (int j = 0; j < sb.generator_count(); ++j)
            for (int i = 0; i < nb; ++i) s.generators.at(na + i, sa.generator_count() + j) = sb.generators.at(i, j);
        return s;
    };

    return Formation::validate(std::move(form), stack_subs(a.m(), b.m()), stack_subs(a.f(), b.f()));
}

Formation swap_compose(const Formation& a, const Formation& b) {
    if (a.form() != b.form()) throw Error("swap_compose: forms differ");
    if (a.f().generators != b.m().generators) throw Error("swap_compose: middle lagrangian mismatch");
    return Formation::validate(a.form(), a.m(), b.f());
}

namespace {

// Quotient data for condensation: K_perp / K with coordinates.
struct CondensedQuotient {
    ZMat b_perp;        // basis columns of the K_perp lattice
    QuotientSystem qs;  // of K's lattice written in that basis

    std::vector<Int> coords_of_ambient(const std::vector<Int>& z) const {
        auto w = solve_integer(b_perp, z);
        if (!w) throw Error("vector lies outside K_perp");
        return qs.coords(*w);
    }

    std::vector<Int> ambient_of_coords(const std::vector<Int>& c) const {
        return b_perp.apply(qs.lift(c));
    }
};

std::vector<IntPoly> constant_vector(const std::vector<Int>& v) {
    std::vector<IntPoly> r;
    r.reserve(v.size());
    for (const Int& x : v) r.push_back(x == 0 ? IntPoly(0) : IntPoly::constant(0, x));
    return r;
}

}  // namespace

Formation condense(const Formation& fm, const Submodule& k, const Limits& limits) {
    if (fm.dim() != 0) throw Error("condense implements the exact path at d = 0 only");
    const LinkingForm& form = fm.form();
    CompactPairing cp(form, 1, limits);
    const CompactifiedModule& mod = cp.module();
    const Int full_det = mod.relations_det();

    if (!is_isotropic(form, k)) throw NotSublagrangian("K is not isotropic");
    FinSubgroup k_fin = submodule_group(mod, k);
    FinSubgroup f_fin = submodule_group(mod, fm.f());
    FinSubgroup m_fin = submodule_group(mod, fm.m());
    if (!f_fin.contains_subgroup(k_fin)) throw NotSublagrangian("K is not contained in F");

    FinSubgroup k_perp = cp.annihilator(translate_columns(mod, k));
    // i^dual lambda surjective onto K^dual: |K_perp| * |K| = |P|
    if (k_perp.order_in(full_det) * k_fin.order_in(full_det) != mod.order())
        throw NotSublagrangian("annihilator order mismatch");

    FinSubgroup full = mod.full_group();
    bool variant1 = subgroup_intersection(m_fin, k_fin).order_in(full_det) == 1 &&
                    subgroup_sum(k_perp, m_fin) == full;
    bool variant2 = false;
    if (!variant1)
        variant2 = m_fin.contains_subgroup(k_fin) && subgroup_sum(k_perp, f_fin) == full;
    if (!variant1 && !variant2)
        throw SideConditionFailed(
            "neither (M^K = 0 and P = K_perp + M) nor (K <= M and P = K_perp + F) holds");

    CondensedQuotient q;
    q.b_perp = k_perp.basis_columns();
    ZMat k_in_perp(q.b_perp.cols(), k_fin.basis_columns().cols());
    for (int j = 0; j < k_fin.basis_columns().cols(); ++j) {
        auto sol = solve_integer(q.b_perp, k_fin.basis_columns().column(j));
        if (!sol) throw Error("K does not lie inside K_perp");
        for (int i = 0; i < q.b_perp.cols(); ++i) k_in_perp.at(i, j) = (*sol)[i];
    }
    q.qs = QuotientSystem(k_in_perp);

    // induced carrier and an exactly hermitian gram lift on the canonical
    // generators; even forms have vanishing diagonal classes at d = 0
    std::vector<Int> factors = q.qs.factors();
    int nn = static_cast<int>(factors.size());
    IntPolyMatrix new_boundary(nn, nn, 0);
    for (int i = 0; i < nn; ++i) new_boundary.at(i, i) = IntPoly::constant(0, factors[i]);
    Presentation new_carrier = nn == 0 ? Presentation(0) : Presentation::validate(new_boundary);

    std::vector<std::vector<Int>> gen_ambient(nn);
    for (int i = 0; i < nn; ++i) {
        std::vector<Int> e(nn, Int(0));
        e[i] = 1;
        gen_ambient[i] = q.ambient_of_coords(e);
    }
    RatPolyMatrix new_gram(nn, nn, 0);
    for (int i = 0; i < nn; ++i) {
        Rat diag = mod_one(cp.lift(gen_ambient[i], gen_ambient[i]));
        if (form.epsilon() == -1 && diag != 0)
            throw Error("condensed form has a nonvanishing diagonal class; input was not even");
        new_gram.at(i, i) = diag == 0 ? RatPoly(0) : RatPoly::constant(0, diag);
        for (int j = i + 1; j < nn; ++j) {
            Rat v = mod_one(cp.lift(gen_ambient[i], gen_ambient[j]));
            if (v != 0) {
                new_gram.at(i, j) = RatPoly::constant(0, v);
                new_gram.at(j, i) = RatPoly::constant(0, Rat(form.epsilon()) * v);
            }
        }
    }
    LinkingForm new_form = LinkingForm::validate(new_carrier, new_gram, form.epsilon());

    auto project_columns = [&](const ZMat& cols) {
        std::vector<std::vector<IntPoly>> out;
        for (int j = 0; j < cols.cols(); ++j) {
            std::vector<Int> c = q.coords_of_ambient(cols.column(j));
            bool zero = true;
            for (const Int& x : c)
                if (x != 0) zero = false;
            if (!zero) out.push_back(constant_vector(c));
        }
        if (out.empty()) out.push_back(std::vector<IntPoly>(nn, IntPoly(0)));
        return out;
    };

    ZMat m_image_cols =
        variant1 ? lattice_intersection(m_fin.basis_columns(), q.b_perp) : m_fin.basis_columns();
    Submodule new_m = Submodule::from_columns(project_columns(m_image_cols), nn, 0);
    Submodule new_f = Submodule::from_columns(project_columns(f_fin.basis_columns()), nn, 0);
    return Formation::validate(std::move(new_form), std::move(new_m), std::move(new_f));
}

Int degeneracy(const Formation& fm, long ell, const Limits& limits) {
    CompactPairing cp(fm.form(), ell, limits);
    ZMat f_cols = translate_columns(cp.module(), fm.f());
    FinSubgroup f_fin(f_cols, cp.module().relation_matrix());
    FinSubgroup f_perp = cp.annihilator(f_cols);
    Int det = cp.module().relations_det();
    Int index = f_perp.order_in(det);
    Int f_order = f_fin.order_in(det);
    if (index % f_order != 0) throw Error("F is not contained in its annihilator");
    index /= f_order;
    Int root;
    if (!is_perfect_square(index, &root))
        throw NotPerfectSquare("|F_perp / F| = " + index.str());
    return root;
}

FormationInvariantsD0 formation_invariants_d0(const Formation& fm, const Limits& limits) {
    if (fm.dim() != 0) throw Error("formation invariants implemented at d = 0");
    FormationInvariantsD0 inv;
    inv.status = invertibility_check(fm, {1}, std::nullopt, limits).status;
    inv.degeneracy = degeneracy(fm, 1, limits);

    CompactPairing cp(fm.form(), 1, limits);
    ZMat f_cols = translate_columns(cp.module(), fm.f());
    FinSubgroup f_fin(f_cols, cp.module().relation_matrix());
    FinSubgroup f_perp = cp.annihilator(f_cols);
    ZMat b_perp = f_perp.basis_columns();
    ZMat f_in_perp(b_perp.cols(), f_fin.basis_columns().cols());
    for (int j = 0; j < f_fin.basis_columns().cols(); ++j) {
        auto sol = solve_integer(b_perp, f_fin.basis_columns().column(j));
        if (!sol) throw Error("F does not lie inside its annihilator");
        for (int i = 0; i < b_perp.cols(); ++i) f_in_perp.at(i, j) = (*sol)[i];
    }
    inv.defect_factors = QuotientSystem(f_in_perp).factors();
    return inv;
}

}  // namespace stabring
