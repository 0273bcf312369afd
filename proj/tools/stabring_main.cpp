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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stabring/corpus.hpp"
#include "stabring/majorana.hpp"
#include "stabring/report.hpp"
#include "stabring/schrodinger.hpp"

namespace {

using namespace stabring;

struct Options {
    bool json = false;
    long max_dim = 4096;
    long max_group = 4096;

    Limits limits() const {
        Limits l;
        l.max_compact_rows = max_dim;
        l.max_hilbert_dim = max_dim;
        l.max_lagrangian_group = max_group;
        return l;
    }
};

CodeDocument load_document(const std::string& path) {
    if (path == "builtin") return builtin_document();
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

const DocSection& select_section(const CodeDocument& doc, const std::string& name,
                                 const std::string& kind = "") {
    for (const auto& s : doc.sections) {
        if (!name.empty() && s.name != name) continue;
        if (!kind.empty() && s.kind != kind) continue;
        return s;
    }
    throw Error(name.empty() ? "document has no matching section"
                             : "no section named '" + name + "'" +
                                   (kind.empty() ? "" : " of kind " + kind));
}

void emit(const Options& opt, const nlohmann::json& report, const std::string& human) {
    if (opt.json) {
        std::string err;
        if (!validate_report(report, &err)) throw Error("internal: bad report: " + err);
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string status_name(InvertibilityVerdict::Status s) {
    switch (s) {
        case InvertibilityVerdict::Status::CertifiedInvertible: return "CertifiedInvertible";
        case InvertibilityVerdict::Status::Falsified: return "Falsified";
        default: return "PassedFiniteChecks";
    }
}

int cmd_validate(const Options& opt, const std::string& file, const std::string& name) {
    CodeDocument doc = load_document(file);
    nlohmann::json items = nlohmann::json::array();
    std::ostringstream human;
    bool all_ok = true;
    for (const auto& s : doc.sections) {
        if (!name.empty() && s.name != name) continue;
        std::string status = "ok", detail;
        try {
            if (s.kind == "presentation") {
                Presentation p = presentation_from_section(s);
                detail = "k0 = " + p.k0().str();
            } else if (s.kind == "form") {
                LinkingForm f = form_from_section(s);
                detail = "epsilon = " + std::to_string(f.epsilon());
            } else if (s.kind == "formation") {
                Formation fm = formation_from_section(s);
                detail = "carrier size " + std::to_string(fm.form().size());
            } else if (s.kind == "quadratic") {
                FiniteQuadraticForm q = quadratic_from_section(s);
                detail = "|D| = " + q.order().str();
            } else if (s.kind == "majorana") {
                majorana_generators_from_section(s);
                detail = "parsed";
            }
        } catch (const std::exception& e) {
            status = "invalid";
            detail = e.what();
            all_ok = false;
        }
        items.push_back({{"kind", s.kind}, {"name", s.name}, {"status", status}, {"detail", detail}});
        human << s.kind << " " << s.name << ": " << status << " (" << detail << ")\n";
    }
    emit(opt, make_report("validate", all_ok ? "ok" : "invalid", {{"sections", items}}), human.str());
    return all_ok ? 0 : 1;
}

int cmd_dual(const Options& opt, const std::string& file, const std::string& name) {
    CodeDocument doc = load_document(file);
    Presentation p = presentation_from_section(select_section(doc, name, "presentation"));
    Presentation d = p.s_dual();
    std::string matrix = print_poly_matrix(d.boundary());
    emit(opt, make_report("dual", "ok", {{"matrix", matrix}, {"k0", d.k0().str()}}),
         "dual boundary = " + matrix + "\n");
    return 0;
}

int cmd_count(const Options& opt, const std::string& file, const std::string& name, long ell) {
    CodeDocument doc = load_document(file);
    Presentation p = presentation_from_section(select_section(doc, name, "presentation"));
    CountResult r = count_elements(p, ell, opt.limits());
    std::ostringstream human;
    human << "|M_ell| = " << r.order.str() << " (expected k0^(ell^d) = " << r.expected.str()
          << ", check " << (r.check_passed ? "passed" : "FAILED") << ")\n";
    emit(opt,
         make_report("count", "ok",
                     {{"order", r.order.str()}, {"expected", r.expected.str()}, {"check", r.check_passed}}),
         human.str());
    return 0;
}

int cmd_witt(const Options& opt, const std::string& file, const std::string& name, bool sigma,
             bool lagrangian, bool invariants) {
    CodeDocument doc = load_document(file);
    FiniteQuadraticForm q = quadratic_from_section(select_section(doc, name, "quadratic"));
    nlohmann::json data{{"order", q.order().str()}};
    std::ostringstream human;
    human << "form " << (name.empty() ? "(first)" : name) << ", |D| = " << q.order().str() << "\n";
    if (sigma || invariants || (!sigma && !lagrangian && !invariants)) {
        GaussMilgramResult g = gauss_milgram(q, opt.limits());
        data["sigma"] = g.sigma;
        data["magnitude_ok"] = g.magnitude_ok;
        human << "gauss-milgram sigma = " << g.sigma << " (mod 8), |G|^2 = |D| "
              << (g.magnitude_ok ? "verified" : "FAILED") << "\n";
    }
    if (lagrangian) {
        auto l = find_lagrangian(q, opt.limits());
        data["lagrangian_found"] = l.has_value();
        if (l) {
            nlohmann::json gens = nlohmann::json::array();
            for (const auto& g : *l) {
                std::string s;
                for (const Int& c : g) s += (s.empty() ? "" : ",") + c.str();
                gens.push_back(s);
            }
            data["lagrangian"] = gens;
            human << "lagrangian: found, " << l->size() << " generators\n";
        } else {
            human << "lagrangian: none\n";
        }
    }
    if (invariants) {
        WittInvariants w = witt_invariants(q, opt.limits());
        nlohmann::json per;
        for (const auto& [p, v] : w.per_prime)
            per[p.str()] = {{"component_order", v.first.str()}, {"sigma_p", v.second}};
        data["per_prime"] = per;
        human << "per-prime invariants:";
        for (const auto& [p, v] : w.per_prime)
            human << "  p=" << p.str() << ": |D_p|=" << v.first.str() << " sigma_p=" << v.second;
        human << "\n";
    }
    emit(opt, make_report("witt", "ok", data), human.str());
    return 0;
}

int cmd_check(const Options& opt, const std::string& file, const std::string& name,
              std::vector<long> ells) {
    CodeDocument doc = load_document(file);
    Formation fm = formation_from_section(select_section(doc, name, "formation"));
    if (ells.empty()) ells = {1, 2, 3};
    InvertibilityVerdict v = invertibility_check(fm, ells, std::nullopt, opt.limits());
    std::ostringstream human;
    human << "invertibility: " << status_name(v.status) << "\n";
    for (const auto& e : v.evidence) human << "  " << e << "\n";
    nlohmann::json data{{"status", status_name(v.status)}, {"evidence", v.evidence}};
    if (v.witness) {
        std::string w;
        for (const auto& p : *v.witness) w += (w.empty() ? "(" : ", ") + p.str();
        w += ")";
        human << "  witness in F_perp \\ F at ell = " << v.witness_ell << ": " << w << "\n";
        data["witness"] = w;
        data["witness_ell"] = v.witness_ell;
    }
    emit(opt, make_report("check", "ok", data), human.str());
    return 0;
}

int cmd_degeneracy(const Options& opt, const std::string& file, const std::string& name, long ell) {
    CodeDocument doc = load_document(file);
    Formation fm = formation_from_section(select_section(doc, name, "formation"));
    Int d = degeneracy(fm, ell, opt.limits());
    emit(opt, make_report("degeneracy", "ok", {{"ell", ell}, {"degeneracy", d.str()}}),
         "degeneracy(ell = " + std::to_string(ell) + ") = " + d.str() + "\n");
    return 0;
}

int cmd_simulate(const Options& opt, const std::string& file, const std::string& name, long ell,
                 bool ground_dim, bool lfs, const std::string& dump_spectrum) {
    CodeDocument doc = load_document(file);
    Formation fm = formation_from_section(select_section(doc, name, "formation"));
    SchrodingerRep rep(fm.form(), ell, fm.m(), opt.limits());
    nlohmann::json data{{"ell", ell}, {"hilbert_dim", rep.dim()}};
    std::ostringstream human;
    human << "hilbert dimension = " << rep.dim() << "\n";

    HamiltonianTerms h = build_hamiltonian(fm, ell, rep);
    data["terms"] = h.terms.size();

    if (ground_dim) {
        GroundSpace g = ground_space(h.terms, rep);
        data["ground_dim"] = g.dimension;
        data["frustration_free"] = g.frustration_free;
        human << "ground-space dimension = " << g.dimension
              << (g.frustration_free ? " (frustration-free)" : "") << "\n";
    }
    if (lfs) {
        const WeylAlgebra& alg = rep.algebra();
        std::vector<WeylElement> seps, flips;
        int half = fm.form().size() / 2;
        for (int a = 0; a < half; ++a)
            for (const Monomial& site : alg.module().site_monomials()) {
                std::vector<IntPoly> z(fm.form().size(), IntPoly(fm.dim()));
                z[a] = IntPoly::constant(fm.dim(), -1);
                seps.push_back(make_weyl_translate(alg, z, site));
                std::vector<IntPoly> x(fm.form().size(), IntPoly(fm.dim()));
                x[half + a] = IntPoly::constant(fm.dim(), 1);
                flips.push_back(make_weyl_translate(alg, x, site));
            }
        long q = 1;
        for (const Int& f : rep.algebra().module().quotient().factors())
            q = std::max(q, f.convert_to<long>());
        SeparatorReport r = verify_lfs(rep, seps, flips, q);
        data["lfs"] = {{"commuting", r.commuting},
                       {"separating", r.separating},
                       {"flips_ok", r.flips_ok},
                       {"max_residual", r.max_residual}};
        human << "lfs: commuting = " << (r.commuting ? "yes" : "no")
              << ", separating = " << (r.separating ? "yes" : "no")
              << ", flips = " << (r.flips_ok ? "yes" : "no") << "\n";
    }
    if (!dump_spectrum.empty()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix);
        std::map<long, long> hist;  // eigenvalue rounded to 1e-9 -> multiplicity
        for (long i = 0; i < rep.dim(); ++i) hist[std::lround(es.eigenvalues()(i) * 1e9)] += 1;
        std::ofstream out(dump_spectrum);
        if (!out) throw Error("cannot write '" + dump_spectrum + "'");
        out << "# eigenvalue multiplicity\n";
        for (const auto& [k, m] : hist) out << static_cast<double>(k) / 1e9 << " " << m << "\n";
        human << "spectrum written to " << dump_spectrum << "\n";
    }
    emit(opt, make_report("simulate", "ok", data), human.str());
    return 0;
}

int cmd_majorana(const Options& opt, const std::string& check_file, const std::string& name,
                 int verify_kappa) {
    nlohmann::json data;
    std::ostringstream human;
    if (!check_file.empty()) {
        CodeDocument doc = load_document(check_file);
        auto gens = majorana_generators_from_section(select_section(doc, name, "majorana"));
        MajoranaCodeReport r = is_majorana_code(gens);
        data["code_valid"] = r.valid;
        if (!r.valid) data["reason"] = r.reason;
        human << "majorana code: " << (r.valid ? "valid" : "invalid (" + r.reason + ")") << "\n";
    }
    if (verify_kappa > 0) {
        OddFormF2 form(verify_kappa);
        long total = 1;
        for (int i = 0; i < 2 * verify_kappa; ++i) total *= 2;
        bool ok = true;
        std::vector<std::uint8_t> x(2 * verify_kappa), y(2 * verify_kappa);
        for (long a = 0; a < total && ok; ++a)
            for (long b = 0; b < total && ok; ++b) {
                for (int i = 0; i < 2 * verify_kappa; ++i) {
                    x[i] = (a >> i) & 1;
                    y[i] = (b >> i) & 1;
                }
                ok = form.modified_commutator(x, y) == kappa(x, y);
            }
        data["kappa_identity"] = ok;
        data["pairs"] = total * total;
        human << "modified commutator vs kappa on " << total * total << " pairs: "
              << (ok ? "identical" : "MISMATCH") << "\n";
    }
    emit(opt, make_report("majorana", "ok", data), human.str());
    return 0;
}

int cmd_table(const Options& opt, long d) {
    EdEntry e = e_d_table(d);
    std::ostringstream human;
    human << "E_" << d << " = " << e.group << "\n";
    if (!e.expansion.empty()) human << "  " << e.expansion << "\n";
    emit(opt, make_report("table", "ok", {{"d", d}, {"group", e.group}, {"expansion", e.expansion}}),
         human.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for translation-invariant stabilizer codes"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Options opt;
    app.add_flag("--json", opt.json, "emit a machine-readable report");
    app.add_option("--max-dim", opt.max_dim, "cap on compactified matrix / Hilbert dimensions");
    app.add_option("--max-group", opt.max_group, "cap on enumerated group orders");

    std::string file = "builtin", name;
    long ell = 2, d = 3;
    std::vector<long> ells;
    bool sigma = false, lagrangian = false, invariants = false, ground = false, lfs = false;
    std::string dump, check_code;
    int verify_kappa = 0;

    auto add_file = [&](CLI::App* sub, bool with_name = true) {
        sub->add_option("file", file, "input document path, or 'builtin'");
        if (with_name) sub->add_option("--name", name, "section name to select");
    };

    auto* c_validate = app.add_subcommand("validate", "validate the sections of a document");
    c_validate->fallthrough();
    add_file(c_validate);
    auto* c_dual = app.add_subcommand("dual", "S-dual of a presentation");
    c_dual->fallthrough();
    add_file(c_dual);
    auto* c_count = app.add_subcommand("count", "compactified group order and the counting law");
    c_count->fallthrough();
    add_file(c_count);
    c_count->add_option("--ell", ell, "torus length");
    auto* c_witt = app.add_subcommand("witt", "Witt data of a d = 0 quadratic form");
    c_witt->fallthrough();
    add_file(c_witt);
    c_witt->add_flag("--sigma", sigma, "Gauss-Milgram signature");
    c_witt->add_flag("--lagrangian", lagrangian, "exhaustive lagrangian search");
    c_witt->add_flag("--invariants", invariants, "per-prime invariants");
    auto* c_check = app.add_subcommand("check", "invertibility verdict for a formation");
    c_check->fallthrough();
    add_file(c_check);
    c_check->add_option("--ell", ells, "torus lengths to test");
    auto* c_deg = app.add_subcommand("degeneracy", "ground-space dimension by the combinatorial index");
    c_deg->fallthrough();
    add_file(c_deg);
    c_deg->add_option("--ell", ell, "torus length");
    auto* c_sim = app.add_subcommand("simulate", "explicit operator representation on the torus");
    c_sim->fallthrough();
    add_file(c_sim);
    c_sim->add_option("--ell", ell, "torus length");
    c_sim->add_flag("--ground-dim", ground, "ground space via exact diagonalization");
    c_sim->add_flag("--verify-lfs", lfs, "separator / flipper verification");
    c_sim->add_option("--dump-spectrum", dump, "write the eigenvalue multiplicity table");
    auto* c_maj = app.add_subcommand("majorana", "Majorana code checks");
    c_maj->fallthrough();
    c_maj->add_option("--check-code", check_code, "document with a majorana section");
    c_maj->add_option("--name", name, "section name to select");
    c_maj->add_option("--verify-kappa", verify_kappa, "exhaustive kappa identity check for n blocks");
    auto* c_table = app.add_subcommand("table", "classification answer E_d");
    c_table->fallthrough();
    c_table->add_option("--d", d, "spatial dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) return cmd_validate(opt, file, name);
        if (c_dual->parsed()) return cmd_dual(opt, file, name);
        if (c_count->parsed()) return cmd_count(opt, file, name, ell);
        if (c_witt->parsed()) return cmd_witt(opt, file, name, sigma, lagrangian, invariants);
        if (c_check->parsed()) return cmd_check(opt, file, name, ells);
        if (c_deg->parsed()) return cmd_degeneracy(opt, file, name, ell);
        if (c_sim->parsed()) return cmd_simulate(opt, file, name, ell, ground, lfs, dump);
        if (c_maj->parsed()) return cmd_majorana(opt, check_code, name, verify_kappa);
        if (c_table->parsed()) return cmd_table(opt, d);
    } catch (const stabring::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stabring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
