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

#include <json.hpp>

#include <string>

namespace stabring {

/// Machine-readable CLI report envelope. The schema ships at
/// schemas/report.schema.json; validate_report implements exactly the
/// constraints written there.
nlohmann::json make_report(const std::string& command, const std::string& status, nlohmann::json data);

bool validate_report(const nlohmann::json& report, std::string* error = nullptr);

}  // namespace stabring
