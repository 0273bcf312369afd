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

#include <vector>

#include "stabring/compactify.hpp"

namespace stabring {

/// Ext groups of a finite abelian group against the coefficient ring Z/n,
/// reported as invariant factor lists per degree i = 1, 2.
struct ExtReport {
    std::vector<std::vector<Int>> ext;  // ext[0] = Ext^1, ext[1] = Ext^2
    bool all_vanish = true;
};

/// Computes Ext^i_{Z/n}(M, Z/n) for i = 1, 2 from the invariant-factor
/// decomposition of M, via the 2-periodic free resolution of each cyclic
/// factor Z/m over Z/n:
///
///   ... -> Z/n --(n/m)--> Z/n --(m)--> Z/n -> Z/m -> 0
///
/// Dualizing gives the cochain Z/n --(m)--> Z/n --(n/m)--> Z/n --(m)--> ...
/// whose cohomology at each spot is ker/im of multiplication maps on Z/n,
/// computed exactly with gcd arithmetic. Z/n is self-injective, so every
/// group here comes out trivial; the computation is kept honest rather than
/// short-circuited, and the tests pin this against a brute-force oracle.
/// Throws when n does not annihilate the group.
ExtReport ext_charges_d0(const FiniteGroupPresentation& g, const Int& n);

/// Same, starting from a plain list of cyclic orders.
ExtReport ext_charges_d0(const std::vector<Int>& invariant_factors, const Int& n);

}  // namespace stabring
