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

#include "stabring/report.hpp"

namespace stabring {

nlohmann::json make_report(const std::string& command, const std::string& status, nlohmann::json data) {
    return nlohmann::json{{"command", command}, {"status", status}, {"data", std::move(data)}};
}

bool validate_report(const nlohmann::json& report, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (!report.is_object()) return fail("report must be an object");
    for (const char* key : {"command", "status", "data"})
        if (!report.contains(key)) return fail(std::string("missing required key '") + key + "'");
    if (!report["command"].is_string()) return fail("'command' must be a string");
    if (!report["status"].is_string()) return fail("'status' must be a string");
    const std::string status = report["status"].get<std::string>();
    if (status != "ok" && status != "invalid" && status != "error")
        return fail("'status' must be one of ok, invalid, error");
    if (!report["data"].is_object()) return fail("'data' must be an object");
    return true;
}

}  // namespace stabring
