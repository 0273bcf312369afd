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

#include <string>
#include <vector>

#include "stabring/document.hpp"

namespace stabring {

/// The built-in examples as document text, one document covering each
/// family; also written out under fixtures/ for the CLI.
const std::string& builtin_document_text();

const CodeDocument& builtin_document();

/// Named accessors over the built-ins.
Formation builtin_formation(const std::string& name);
Presentation builtin_presentation(const std::string& name);
FiniteQuadraticForm builtin_quadratic(const std::string& name);

std::vector<std::string> builtin_names(const std::string& kind);

}  // namespace stabring
