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

#include <cctype>
#include <string>

#include "stabring/laurent.hpp"

namespace stabring {

// Grammar shared by every file format:
//   poly   := term (('+'|'-') term)*
//   term   := sign? coeff? ('*'? varpow)*
//   varpow := 'x' INT ('^' '-'? INT)?
//   coeff  := INT ('/' INT)?
// Whitespace is free. Example: "2*x1^-1*x2 + 3".
namespace poly_grammar {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    char next() {
        char c = peek();
        ++pos;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) next();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
};

inline Int parse_uint(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a digit");
    Int v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) v = v * 10 + (c.next() - '0');
    return v;
}

inline std::int64_t parse_exponent(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        c.next();
    } else if (c.peek() == '+') {
        c.next();
    }
    Int v = parse_uint(c);
    if (v > Int(1) << 40) c.fail("exponent too large");
    auto e = static_cast<std::int64_t>(v.convert_to<long long>());
    return neg ? -e : e;
}

template <typename C>
C parse_coeff(Cursor& c);

template <>
inline Int parse_coeff<Int>(Cursor& c) {
    return parse_uint(c);
}

template <>
inline Rat parse_coeff<Rat>(Cursor& c) {
    Int n = parse_uint(c);
    c.skip_ws();
    if (c.peek() == '/') {
        c.next();
        c.skip_ws();
        Int d = parse_uint(c);
        if (d == 0) c.fail("zero denominator");
        return Rat(n, d);
    }
    return Rat(n);
}

template <typename C>
LaurentPoly<C> parse_poly(Cursor& c, int dim) {
    LaurentPoly<C> result(dim);
    c.skip_ws();
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) {
            if (first) c.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.next() == '-') sign = -1;
            c.skip_ws();
        } else if (!first) {
            break;  // delimiter for the caller
        }
        first = false;

        C coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_coeff<C>(c);
            saw_coeff = true;
        }
        Monomial mono = Monomial::one(dim);
        bool saw_var = false;
        while (true) {
            c.skip_ws();
            if (c.peek() == '*') {
                c.next();
                c.skip_ws();
            }
            if (c.peek() != 'x') break;
            c.next();
            Int which = parse_uint(c);
            if (which < 1 || which > dim) c.fail("variable index out of range for dimension " + std::to_string(dim));
            int var = which.convert_to<int>() - 1;
            std::int64_t exp = 1;
            c.skip_ws();
            if (c.peek() == '^') {
                c.next();
                c.skip_ws();
                exp = parse_exponent(c);
            }
            mono.exps[var] += exp;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) c.fail("expected a coefficient or a variable");
        if (sign < 0) coeff = C(-coeff);
        result.add_term(mono, coeff);
    }
    return result;
}

}  // namespace poly_grammar

template <typename C>
LaurentPoly<C> parse_laurent(const std::string& text, int dim) {
    poly_grammar::Cursor c(text);
    auto p = poly_grammar::parse_poly<C>(c, dim);
    c.skip_ws();
    if (!c.done()) c.fail("trailing input after polynomial");
    return p;
}

inline IntPoly parse_int_poly(const std::string& text, int dim) { return parse_laurent<Int>(text, dim); }
inline RatPoly parse_rat_poly(const std::string& text, int dim) { return parse_laurent<Rat>(text, dim); }

}  // namespace stabring
