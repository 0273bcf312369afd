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

#include <stdexcept>
#include <string>

namespace stabring {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct OwnerMismatch : Error {
    explicit OwnerMismatch(const std::string& msg) : Error("owner mismatch: " + msg) {}
};

struct ZeroDeterminant : Error {
    explicit ZeroDeterminant(const std::string& msg) : Error("zero determinant: " + msg) {}
};

struct NonUnitMonomialFactor : Error {
    explicit NonUnitMonomialFactor(const std::string& msg)
        : Error("determinant is not a monomial times an integer: " + msg) {}
};

struct IllDefined : Error {
    explicit IllDefined(const std::string& msg) : Error("form does not descend to the cokernel: " + msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error("form is not epsilon-hermitian: " + msg) {}
};

struct ResourceCap : Error {
    explicit ResourceCap(const std::string& msg) : Error("resource cap exceeded: " + msg) {}
};

struct CountMismatch : Error {
    explicit CountMismatch(const std::string& msg) : Error("counting law violated (internal bug): " + msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg) : Error("degenerate form: " + msg) {}
};

struct NotPerfectSquare : Error {
    explicit NotPerfectSquare(const std::string& msg) : Error("index is not a perfect square: " + msg) {}
};

struct NotSublagrangian : Error {
    explicit NotSublagrangian(const std::string& msg) : Error("not a sublagrangian: " + msg) {}
};

struct SideConditionFailed : Error {
    explicit SideConditionFailed(const std::string& msg) : Error("condensation side condition failed: " + msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace stabring
