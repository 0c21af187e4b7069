/* Copyright 2026 The tgp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Canonical s-expression form of program trees.
//
//   (MinInt (MaxInt (MinInt x2 x1) x0) (MaxInt x1 x2))
//   (Map (lambda Int (MaxInt y 0)) x0)
//
// Atoms: `xN` program argument, `y` parameter of the innermost lambda,
// literals `-3`, `2.5`, `True`, `'c'`, `"text"`, `[1,2]`, `{1,'a'}`.
// A literal whose type cannot be read off (an empty list) is wrapped as
// `(the [Int] [])`. Types inside forms use the compact spelling
// `Int`, `[Char]`, `{Int,Bool}`.

#ifndef TGP_SEXPR_HPP
#define TGP_SEXPR_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/tree.hpp"

namespace tgp {

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generic s-expression: an atom or a parenthesized list.
struct SExpr {
    std::string atom;
    std::vector<SExpr> list;
    bool isList = false;
};

SExpr readSExpr(std::string_view text);
/// Reads every top-level expression in `text`.
std::vector<SExpr> readAllSExprs(std::string_view text);

std::string compactType(const Type& t);
std::optional<Type> parseCompactType(std::string_view text);

/// Literal syntax for a data value; `type` disambiguates empty lists.
std::string literalString(const Value& v, const Type& type);
/// Parses a literal atom. Returns the value and the type it spells, if any.
std::pair<Value, std::optional<Type>> parseLiteral(std::string_view atom);

std::string toSExpr(const Tree& tree);
/// Builds a tree, resolving polymorphic symbols from the types of their children.
Tree parseTree(std::string_view text, std::span<const Type> argTypes);
Tree treeFromSExpr(const SExpr& expr, std::span<const Type> argTypes);

}  // namespace tgp

#endif  // TGP_SEXPR_HPP
