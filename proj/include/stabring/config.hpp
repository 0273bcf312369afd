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

namespace stabring {

/// Resource caps for the finite (compactified) computations. Desk scale by
/// default; the CLI exposes overrides.
struct Limits {
    long max_compact_rows = 4096;     // side of the compactified integer matrix
    long max_hilbert_dim = 4096;      // Schrodinger representation dimension
    long max_enum_group = 1 << 20;    // element enumeration (Gauss sums)
    long max_lagrangian_group = 4096; // subgroup search
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace stabring
