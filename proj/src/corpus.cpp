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

#include "stabring/corpus.hpp"

namespace stabring {

const std::string& builtin_document_text() {
    static const std::string text = R"(# Built-in examples.
# Presentations: torsion modules as square boundary matrices.
[presentation z2-chain]
dimension = 1
matrix = [[2]]

[presentation z3-chain]
dimension = 1
matrix = [[3]]

[presentation z2-plane]
dimension = 2
matrix = [[2]]

[presentation mixed-6]
dimension = 1
matrix = [[2, x1],[0, 3]]

[presentation shear-2]
dimension = 1
matrix = [[1 + x1, 2],[x1, 2]]

# Stabilizer codes as formations (P, lambda; M, F), all anti-hermitian.
# product: F equals the reference lagrangian; the all-|0> code.
[formation product]
dimension = 1
epsilon = -1
standard_form_of = [[2]]
m_generators = standard
f_generators = standard

# product-dual: F is the dual lagrangian; the uniform-superposition code.
[formation product-dual]
dimension = 1
epsilon = -1
standard_form_of = [[2]]
m_generators = standard
f_generators = standard-dual

# cluster-like: an invertible 1d code with a mixed stabilizer generator.
[formation cluster-like]
dimension = 1
epsilon = -1
standard_form_of = [[2]]
m_generators = standard
f_generators = [[x1 + x1^-1, 1]]

# toric: vertex and plaquette stabilizers of the toric code; two qubits
# per site on the square lattice.
[formation toric]
dimension = 2
epsilon = -1
standard_form_of = [[2, 0],[0, 2]]
m_generators = standard
f_generators = [[1 + x1^-1, 1 + x2^-1, 0, 0],[0, 0, 1 + x2, 1 + x1]]

# semion-d0: a twisted lagrangian inside H^-(Z/4) at d = 0.
[formation semion-d0]
dimension = 0
epsilon = -1
standard_form_of = [[4]]
m_generators = standard
f_generators = [[1, 2]]

# d = 0 quadratic forms on finite abelian groups.
[quadratic semion]
orders = [2]
q = [1/4]

[quadratic anti-semion]
orders = [2]
q = [3/4]

[quadratic fermion]
orders = [2]
q = [1/2]

[quadratic w3-gen]
orders = [3]
q = [1/3]

[quadratic w3-neg]
orders = [3]
q = [2/3]

[quadratic hyperbolic-2]
orders = [2, 2]
q = [0, 0]
b = [[0, 1/2],[1/2, 0]]

[quadratic hyperbolic-3]
orders = [3, 3]
q = [0, 0]
b = [[0, 1/3],[1/3, 0]]

[quadratic hyperbolic-4]
orders = [4, 4]
q = [0, 0]
b = [[0, 1/4],[1/4, 0]]

[quadratic z4-odd]
orders = [4]
q = [1/8]

[quadratic z4-odd-neg]
orders = [4]
q = [7/8]

[quadratic z5-gen]
orders = [5]
q = [1/5]

[quadratic z5-twist]
orders = [5]
q = [2/5]

[quadratic double-semion]
orders = [2, 2]
q = [1/4, 3/4]

# Majorana stabilizer code examples over (Z/2)^{2n}.
[majorana pair-code]
generators = [1100, 0011]

[majorana single-odd]
generators = [10]

[majorana overlap-pair]
generators = [110000, 011000]
)";
    return text;
}

const CodeDocument& builtin_document() {
    static const CodeDocument doc = parse_document(builtin_document_text());
    return doc;
}

namespace {
const DocSection& find_kind(const std::string& kind, const std::string& name) {
    for (const auto& s : builtin_document().sections)
        if (s.kind == kind && s.name == name) return s;
    throw Error("no built-in " + kind + " named '" + name + "'");
}
}  // namespace

Formation builtin_formation(const std::string& name) {
    return formation_from_section(find_kind("formation", name));
}

Presentation builtin_presentation(const std::string& name) {
    return presentation_from_section(find_kind("presentation", name));
}

FiniteQuadraticForm builtin_quadratic(const std::string& name) {
    return quadratic_from_section(find_kind("quadratic", name));
}

std::vector<std::string> builtin_names(const std::string& kind) {
    std::vector<std::string> names;
    for (const auto& s : builtin_document().sections)
        if (s.kind == kind) names.push_back(s.name);
    return names;
}

}  // namespace stabring
