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

#include "stabring/ext_charges.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace stabring {

namespace {

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Order of ker(x b) / im(x a) on Z/n, for maps with (x b)(x a) = 0.
// ker(x b) is the cyclic subgroup of order gcd(b, n); im(x a) is the cyclic
// subgroup generated by a, of order n / gcd(a, n). As subgroups of a cyclic
// group they are nested, so the quotient order is the ratio.
Int cohomology_order(const Int& a, const Int& b, const Int& n) {
    Int ker = gcd_int(b, n);
    Int im = n / gcd_int(a, n);
    if (ker % im != 0) throw Error("ext complex is not a complex");
    return ker / im;
}

}  // namespace

ExtReport ext_charges_d0(const std::vector<Int>& invariant_factors, const Int& n) {
    if (n <= 0) throw Error("annihilator must be positive");
    ExtReport r;
    r.ext.assign(2, {});
    for (const Int& m : invariant_factors) {
        if (m <= 1) continue;
        if (n % m != 0) throw Error("n = " + n.str() + " does not annihilate a factor of order " + m.str());
        // cochain after Hom(-, Z/n): x m, then x (n/m), alternating
        Int h1 = cohomology_order(m, n / m, n);
        Int h2 = cohomology_order(n / m, m, n);
        if (h1 > 1) r.ext[0].push_back(h1);
        if (h2 > 1) r.ext[1].push_back(h2);
    }
    r.all_vanish = r.ext[0].empty() && r.ext[1].empty();
    return r;
}

ExtReport ext_charges_d0(const FiniteGroupPresentation& g, const Int& n) {
    return ext_charges_d0(g.invariant_factors, n);
}

}  // namespace stabring
