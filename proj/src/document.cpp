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

#include "stabring/document.hpp"

#include <algorithm>
#include <sstream>

#include "stabring/poly_parse.hpp"

namespace stabring {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

const std::vector<std::string> kKinds = {"presentation", "form", "formation", "quadratic", "majorana"};

// Splits a bracketed list at the given nesting depth; entries contain no
// brackets or commas of their own beyond nested lists.
std::vector<std::string> split_list(const std::string& text, int line) {
    std::string t = trim(text);
    if (t.empty() || t.front() != '[' || t.back() != ']')
        throw ParseError(line, 1, "expected a bracketed list, got '" + t + "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : inner) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!trim(current).empty() || !parts.empty()) parts.push_back(trim(current));
    if (depth != 0) throw ParseError(line, 1, "unbalanced brackets");
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

}  // namespace

bool operator==(const CodeDocument& a, const CodeDocument& b) {
    if (a.sections.size() != b.sections.size()) return false;
    for (std::size_t i = 0; i < a.sections.size(); ++i) {
        const DocSection& x = a.sections[i];
        const DocSection& y = b.sections[i];
        if (x.kind != y.kind || x.name != y.name || x.entries != y.entries) return false;
    }
    return true;
}

CodeDocument parse_document(const std::string& text) {
    CodeDocument doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool any_content = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        any_content = true;

        if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string::npos) {
            std::string header = trim(line.substr(1, line.size() - 2));
            std::size_t space = header.find(' ');
            if (space == std::string::npos) throw ParseError(lineno, 1, "section header needs a kind and a name");
            DocSection s;
            s.kind = trim(header.substr(0, space));
            s.name = trim(header.substr(space + 1));
            s.line = lineno;
            if (std::find(kKinds.begin(), kKinds.end(), s.kind) == kKinds.end())
                throw ParseError(lineno, 2, "unknown section kind '" + s.kind + "'");
            if (s.name.empty()) throw ParseError(lineno, 2, "empty section name");
            doc.sections.push_back(std::move(s));
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "expected 'key = value'");
        if (doc.sections.empty()) throw ParseError(lineno, 1, "entry outside of any section");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, 1, "empty key");
        doc.sections.back().entries.emplace_back(key, value);
    }
    if (!any_content) throw ParseError(1, 1, "empty document");
    return doc;
}

std::string print_document(const CodeDocument& doc) {
    std::ostringstream os;
    bool first = true;
    for (const DocSection& s : doc.sections) {
        if (!first) os << "\n";
        first = false;
        os << "[" << s.kind << " " << s.name << "]\n";
        for (const auto& [k, v] : s.entries) os << k << " = " << v << "\n";
    }
    return os.str();
}

IntPolyMatrix parse_poly_matrix(const std::string& text, int dim) {
    std::vector<std::string> rows = split_list(text, 1);
    int r = static_cast<int>(rows.size());
    int c = -1;
    std::vector<std::vector<IntPoly>> entries;
    for (const std::string& row : rows) {
        std::vector<std::string> cells = split_list(row, 1);
        if (c < 0) c = static_cast<int>(cells.size());
        if (static_cast<int>(cells.size()) != c) throw ParseError(1, 1, "ragged matrix rows");
        std::vector<IntPoly> parsed;
        for (const std::string& cell : cells) parsed.push_back(parse_int_poly(cell, dim));
        entries.push_back(std::move(parsed));
    }
    if (c < 0) c = 0;
    IntPolyMatrix m(r, c, dim);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = entries[i][j];
    return m;
}

RatPolyMatrix parse_rat_matrix(const std::string& text, int dim) {
    std::vector<std::string> rows = split_list(text, 1);
    int r = static_cast<int>(rows.size());
    int c = -1;
    std::vector<std::vector<RatPoly>> entries;
    for (const std::string& row : rows) {
        std::vector<std::string> cells = split_list(row, 1);
        if (c < 0) c = static_cast<int>(cells.size());
        if (static_cast<int>(cells.size()) != c) throw ParseError(1, 1, "ragged matrix rows");
        std::vector<RatPoly> parsed;
        for (const std::string& cell : cells) parsed.push_back(parse_rat_poly(cell, dim));
        entries.push_back(std::move(parsed));
    }
    if (c < 0) c = 0;
    RatPolyMatrix m(r, c, dim);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = entries[i][j];
    return m;
}

namespace {

template <typename M>
std::string print_matrix_impl(const M& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string print_poly_matrix(const IntPolyMatrix& m) { return print_matrix_impl(m); }
std::string print_rat_matrix(const RatPolyMatrix& m) { return print_matrix_impl(m); }

namespace {

int dimension_of(const DocSection& s) {
    const std::string& d = s.require("dimension");
    try {
        return std::stoi(d);
    } catch (...) {
        throw ParseError(s.line, 1, "bad dimension '" + d + "'");
    }
}

int epsilon_of(const DocSection& s) {
    const std::string& e = trim(s.require("epsilon"));
    if (e == "-1") return -1;
    if (e == "1" || e == "+1") return 1;
    throw ParseError(s.line, 1, "epsilon must be +1 or -1");
}

}  // namespace

Presentation presentation_from_section(const DocSection& s) {
    int dim = dimension_of(s);
    return Presentation::validate(parse_poly_matrix(s.require("matrix"), dim));
}

LinkingForm form_from_section(const DocSection& s) {
    int dim = dimension_of(s);
    if (const std::string* sf = s.find("standard_form_of")) {
        Presentation m = Presentation::validate(parse_poly_matrix(*sf, dim));
        return standard_form(m, epsilon_of(s));
    }
    Presentation carrier = Presentation::validate(parse_poly_matrix(s.require("matrix"), dim));
    RatPolyMatrix gram = parse_rat_matrix(s.require("gram"), dim);
    return LinkingForm::validate(std::move(carrier), std::move(gram), epsilon_of(s));
}

namespace {

Submodule generators_from(const DocSection& s, const std::string& key, const LinkingForm& form) {
    const std::string& raw = s.require(key);
    if (raw == "standard") {
        // the leading summand of a standard form H(M); M has half the size
        int half = form.size() / 2;
        std::vector<std::vector<IntPoly>> cols;
        for (int j = 0; j < half; ++j) {
            std::vector<IntPoly> col(form.size(), IntPoly(form.dim()));
            col[j] = IntPoly::constant(form.dim(), 1);
            cols.push_back(std::move(col));
        }
        return Submodule::from_columns(cols, form.size(), form.dim());
    }
    if (raw == "standard-dual") {
        int half = form.size() / 2;
        std::vector<std::vector<IntPoly>> cols;
        for (int j = 0; j < half; ++j) {
            std::vector<IntPoly> col(form.size(), IntPoly(form.dim()));
            col[half + j] = IntPoly::constant(form.dim(), 1);
            cols.push_back(std::move(col));
        }
        return Submodule::from_columns(cols, form.size(), form.dim());
    }
    IntPolyMatrix cols = parse_poly_matrix(raw, form.dim());
    // rows of the written list are generator columns
    std::vector<std::vector<IntPoly>> gens;
    for (int i = 0; i < cols.rows(); ++i) {
        std::vector<IntPoly> g;
        for (int j = 0; j < cols.cols(); ++j) g.push_back(cols.at(i, j));
        gens.push_back(std::move(g));
    }
    return Submodule::from_columns(gens, form.size(), form.dim());
}

}  // namespace

Formation formation_from_section(const DocSection& s) {
    LinkingForm form = form_from_section(s);
    Submodule m = generators_from(s, "m_generators", form);
    Submodule f = generators_from(s, "f_generators", form);
    Formation fm = Formation::validate(std::move(form), std::move(m), std::move(f));
    if (const std::string* cert = s.find("f_certificate"))
        fm.f_certificate = Presentation::validate(parse_poly_matrix(*cert, fm.dim()));
    if (const std::string* cert = s.find("quotient_certificate"))
        fm.quotient_certificate = Presentation::validate(parse_poly_matrix(*cert, fm.dim()));
    return fm;
}

FiniteQuadraticForm quadratic_from_section(const DocSection& s) {
    std::vector<std::string> order_strs = split_list(s.require("orders"), s.line);
    std::vector<Int> orders;
    for (const auto& o : order_strs) orders.push_back(Int(o));
    std::vector<std::string> q_strs = split_list(s.require("q"), s.line);
    std::vector<Rat> q;
    for (const auto& v : q_strs) {
        RatPoly p = parse_rat_poly(v, 0);
        q.push_back(p.trace());
    }
    std::vector<std::vector<Rat>> b;
    if (const std::string* braw = s.find("b")) {
        for (const std::string& row : split_list(*braw, s.line)) {
            std::vector<Rat> r;
            for (const std::string& cell : split_list(row, s.line)) r.push_back(parse_rat_poly(cell, 0).trace());
            b.push_back(std::move(r));
        }
    }
    return FiniteQuadraticForm::create(std::move(orders), std::move(q), std::move(b));
}

std::vector<std::vector<std::uint8_t>> majorana_generators_from_section(const DocSection& s) {
    std::vector<std::vector<std::uint8_t>> gens;
    for (const std::string& word : split_list(s.require("generators"), s.line)) {
        std::vector<std::uint8_t> bits;
        for (char c : word) {
            if (c == '0')
                bits.push_back(0);
            else if (c == '1')
                bits.push_back(1);
            else
                throw ParseError(s.line, 1, "majorana generators must be 01-strings");
        }
        gens.push_back(std::move(bits));
    }
    return gens;
}

}  // namespace stabring
