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

#include "stabring/schrodinger.hpp"

#include <cmath>
#include <complex>
#include <map>

namespace stabring {

namespace {

std::complex<double> phase_exp(const Rat& t) {
    // e^{i pi t}; exponents carry small denominators, doubles are exact
    // enough at 1e-12 scale
    return std::polar(1.0, M_PI * t.convert_to<double>());
}

long mixed_radix_index(const std::vector<Int>& coords, const std::vector<Int>& factors) {
    long idx = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i)
        idx = idx * factors[i].convert_to<long>() + coords[i].convert_to<long>();
    return idx;
}

}  // namespace

SchrodingerRep::SchrodingerRep(const LinkingForm& form, long ell, const Submodule& lagrangian,
                               const Limits& limits)
    : algebra_(form, ell, limits) {
    const int n = form.size();
    const int n1 = lagrangian.generator_count();
    if (n1 <= 0 || n1 >= n) throw Error("schrodinger rep needs a proper coordinate-block lagrangian");

    // the reference lagrangian must be the first coordinate block
    for (int j = 0; j < n1; ++j)
        for (int i = 0; i < n; ++i) {
            const IntPoly& e = lagrangian.generators.at(i, j);
            bool expect_one = (i == j);
            if (expect_one && e != IntPoly::constant(form.dim(), 1))
                throw Error("schrodinger rep: lagrangian must be the leading basis block");
            if (!expect_one && !e.is_zero())
                throw Error("schrodinger rep: lagrangian must be the leading basis block");
        }
    // block-diagonal boundary and vanishing diagonal gram blocks
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool cross = (i < n1) != (j < n1);
            if (cross && !form.carrier().boundary().at(i, j).is_zero())
                throw Error("schrodinger rep: boundary must be block-diagonal across the lagrangian");
            if (!cross && !form.gram().at(i, j).is_zero())
                throw Error("schrodinger rep: gram must vanish on the diagonal blocks");
        }

    const long sites = algebra_.module().sites();
    split_ = static_cast<int>(n1 * sites);

    // classes of the shift block label the basis
    int n2 = n - n1;
    IntPolyMatrix shift_block(n2, n2, form.dim());
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) shift_block.at(i, j) = form.carrier().boundary().at(n1 + i, n1 + j);
    CompactifiedModule shift_mod(Presentation::validate(shift_block), ell, limits);
    shift_classes_ = shift_mod.quotient();

    if (shift_classes_.order() > limits.max_hilbert_dim) throw ResourceCap("hilbert dimension");
    dim_ = shift_classes_.order().convert_to<long>();

    std::vector<Int> factors = shift_classes_.factors();
    basis_reps_.resize(dim_);
    std::vector<Int> coords(factors.size(), Int(0));
    for (long idx = 0; idx < dim_; ++idx) {
        basis_reps_[idx] = shift_classes_.lift(coords);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            coords[i] += 1;
            if (coords[i] < factors[i]) break;
            coords[i] = 0;
        }
    }
}

Rat SchrodingerRep::tau(const std::vector<Int>& u, const std::vector<Int>& v) const {
    const int ambient = algebra_.module().ambient_dim();
    std::vector<Int> z1(ambient, Int(0)), z2(ambient, Int(0));
    for (int i = 0; i < split_; ++i) z1[i] = u[i];
    for (int i = split_; i < ambient; ++i) z2[i] = v[i - split_];
    return algebra_.lift(z1, z2);
}

Eigen::MatrixXcd SchrodingerRep::matrix(const WeylElement& w) const {
    const int ambient = algebra_.module().ambient_dim();
    if (static_cast<int>(w.vec.size()) != ambient) throw DimensionMismatch("weyl vector size");
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w.vec);
        if (it != cache_.end()) return phase_exp(w.phase) * it->second;
    }

    std::vector<Int> u(w.vec.begin(), w.vec.begin() + split_);
    std::vector<Int> v(w.vec.begin() + split_, w.vec.end());
    Rat t0 = -tau(u, v);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    std::vector<Int> factors = shift_classes_.factors();
    for (long idx = 0; idx < dim_; ++idx) {
        std::vector<Int> shifted = basis_reps_[idx];
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += v[i];
        long target = mixed_radix_index(shift_classes_.coords(shifted), factors);
        Rat t = t0 + 2 * tau(u, basis_reps_[target]);
        m(target, idx) = phase_exp(t);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(w.vec, m);
    return phase_exp(w.phase) * m;
}

Eigen::MatrixXcd SchrodingerRep::section_twist(const std::vector<std::vector<Int>>& shifts) const {
    if (static_cast<long>(shifts.size()) != dim_) throw DimensionMismatch("section twist length");
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (long idx = 0; idx < dim_; ++idx) {
        // shift by a lagrangian element v(b): diagonal phase from the lift
        const int ambient = algebra_.module().ambient_dim();
        std::vector<Int> z1(ambient, Int(0)), z2(ambient, Int(0));
        if (static_cast<int>(shifts[idx].size()) != split_) throw DimensionMismatch("twist shift size");
        for (int i = 0; i < split_; ++i) z1[i] = shifts[idx][i];
        for (int i = split_; i < ambient; ++i) z2[i] = basis_reps_[idx][i - split_];
        t(idx, idx) = phase_exp(algebra_.lift(z1, z2));
    }
    return t;
}

HamiltonianTerms build_hamiltonian(const Formation& fm, long ell, const SchrodingerRep& rep) {
    const WeylAlgebra& alg = rep.algebra();
    if (ell != alg.module().ell()) throw Error("hamiltonian torus length does not match the representation");
    HamiltonianTerms h;
    for (int j = 0; j < fm.f().generator_count(); ++j)
        for (const Monomial& site : alg.module().site_monomials())
            h.terms.push_back(make_weyl_translate(alg, fm.f().generator(j), site));

    for (std::size_t a = 0; a < h.terms.size(); ++a)
        for (std::size_t b = a + 1; b < h.terms.size(); ++b)
            if (!weyl_commutator(alg, h.terms[a], h.terms[b]).is_zero())
                throw Error("hamiltonian terms " + std::to_string(a) + " and " + std::to_string(b) +
                            " do not commute");

    h.matrix = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
    for (const WeylElement& w : h.terms) {
        Eigen::MatrixXcd m = rep.matrix(w);
        h.matrix -= m + m.adjoint().eval();
    }
    return h;
}

GroundSpace ground_space(const std::vector<WeylElement>& terms, const SchrodingerRep& rep) {
    const double cluster_tol = 1e-10;
    GroundSpace g;
    g.projector = Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
    double energy = 0;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
    for (const WeylElement& w : terms) {
        Eigen::MatrixXcd m = rep.matrix(w);
        Eigen::MatrixXcd herm = m + m.adjoint().eval();
        h -= herm;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
        double top = es.eigenvalues().maxCoeff();
        energy -= top;
        std::vector<long> sel;
        for (long i = 0; i < rep.dim(); ++i)
            if (es.eigenvalues()(i) > top - cluster_tol) sel.push_back(i);
        Eigen::MatrixXcd v(rep.dim(), sel.size());
        for (std::size_t c = 0; c < sel.size(); ++c) v.col(c) = es.eigenvectors().col(sel[c]);
        g.projector = g.projector * (v * v.adjoint());
    }
    double tr = g.projector.trace().real();
    g.dimension = std::lround(tr);
    if (std::abs(tr - static_cast<double>(g.dimension)) > 1e-6)
        throw Error("ground projector trace is not integral");
    double idem = (g.projector * g.projector - g.projector).cwiseAbs().maxCoeff();
    if (idem > 1e-8) throw Error("term projectors do not commute numerically");
    double res = (h * g.projector - energy * g.projector).cwiseAbs().maxCoeff();
    g.frustration_free = g.dimension >= 1 && res < 1e-8;
    return g;
}

SeparatorReport verify_lfs(const SchrodingerRep& rep, const std::vector<WeylElement>& separators,
                           const std::vector<WeylElement>& flippers, long q, double tol) {
    SeparatorReport report;
    std::vector<Eigen::MatrixXcd> zs, xs;
    for (const auto& w : separators) zs.push_back(rep.matrix(w));
    for (const auto& w : flippers) xs.push_back(rep.matrix(w));

    double resid = 0;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            resid = std::max(resid, (zs[i] * zs[j] - zs[j] * zs[i]).cwiseAbs().maxCoeff());
    report.commuting = resid < tol;

    // joint eigenbasis through a deterministic generic hermitian combination
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
    double weight = 1.0;
    for (const auto& z : zs) {
        weight *= 0.611;
        mix += weight * (z + z.adjoint().eval());
        mix += (weight * 0.377) * (std::complex<double>(0, 1) * (z - z.adjoint().eval()));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mix);

    std::map<std::vector<long>, int> signatures;
    bool eigen_ok = true;
    for (long c = 0; c < rep.dim(); ++c) {
        Eigen::VectorXcd v = es.eigenvectors().col(c);
        std::vector<long> key;
        for (const auto& z : zs) {
            std::complex<double> lambda = v.dot(z * v);
            resid = std::max(resid, (z * v - lambda * v).norm());
            if ((z * v - lambda * v).norm() > tol * 100) eigen_ok = false;
            key.push_back(std::lround(std::arg(lambda) / (2 * M_PI) * static_cast<double>(q * 4)));
        }
        signatures[key] += 1;
    }
    report.separating = eigen_ok && static_cast<long>(signatures.size()) == rep.dim();

    bool flips = zs.size() == xs.size();
    std::complex<double> omega = std::polar(1.0, 2 * M_PI / static_cast<double>(q));
    for (std::size_t i = 0; flips && i < zs.size(); ++i)
        for (std::size_t j = 0; flips && j < xs.size(); ++j) {
            Eigen::MatrixXcd comm = zs[i].adjoint() * xs[j].adjoint() * zs[i] * xs[j];
            std::complex<double> expect = (i == j) ? omega : std::complex<double>(1, 0);
            double r = (comm - expect * Eigen::MatrixXcd::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff();
            resid = std::max(resid, r);
            if (r > tol * 100) flips = false;
        }
    report.flips_ok = flips;
    report.max_residual = resid;
    return report;
}

}  // namespace stabring
