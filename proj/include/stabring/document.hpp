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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabring/formation.hpp"
#include "stabring/quadratic_form.hpp"

namespace stabring {

// Line-oriented document grammar (EBNF in docs/format.md):
//
//   document := { section }
//   section  := '[' kind ' ' name ']' NEWLINE { entry }
//   entry    := key '=' value NEWLINE
//   kind     := 'presentation' | 'form' | 'formation' | 'quadratic' | 'majorana'
//
// '#' starts a comment; values are single-line. Matrices are bracketed rows
// of polynomials in the shared grammar, e.g. [[2, x1],[0, 3]].

struct DocSection {
    std::string kind;
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;  // ordered
    int line = 0;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }

    const std::string& require(const std::string& key) const {
        const std::string* v = find(key);
        if (!v) throw ParseError(line, 1, "section [" + kind + " " + name + "] is missing '" + key + "'");
        return *v;
    }
};

struct CodeDocument {
    std::vector<DocSection> sections;

    const DocSection* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }

    friend bool operator==(const CodeDocument& a, const CodeDocument& b);
};

CodeDocument parse_document(const std::string& text);
std::string print_document(const CodeDocument& doc);

/// Typed constructors; validation errors are delegated to the owning
/// modules and surface as their exceptions.
Presentation presentation_from_section(const DocSection& s);
LinkingForm form_from_section(const DocSection& s);
Formation formation_from_section(const DocSection& s);
FiniteQuadraticForm quadratic_from_section(const DocSection& s);
std::vector<std::vector<std::uint8_t>> majorana_generators_from_section(const DocSection& s);

/// Shared matrix grammar helpers.
IntPolyMatrix parse_poly_matrix(const std::string& text, int dim);
RatPolyMatrix parse_rat_matrix(const std::string& text, int dim);
std::string print_poly_matrix(const IntPolyMatrix& m);
std::string print_rat_matrix(const RatPolyMatrix& m);

}  // namespace stabring
