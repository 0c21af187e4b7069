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

#ifndef TGP_TYPES_HPP
#define TGP_TYPES_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tgp {

enum class TypeKind : std::uint8_t { Int, Float, Bool, Char, List, Pair, Fun, Var };

/// Object-language type. Immutable value type; strings are `[Char]`.
class Type {
public:
    Type() = default;

    static Type Int() { return Type(TypeKind::Int); }
    static Type Float() { return Type(TypeKind::Float); }
    static Type Bool() { return Type(TypeKind::Bool); }
    static Type Char() { return Type(TypeKind::Char); }
    static Type String() { return List(Char()); }
    static Type List(Type elem);
    static Type Pair(Type first, Type second);
    static Type Fun(Type arg, Type ret);
    static Type Var(std::string name);

    TypeKind kind() const noexcept { return kind_; }

    const Type& elem() const;
    const Type& first() const;
    const Type& second() const;
    const Type& arg() const;
    const Type& ret() const;
    const std::string& varName() const;

    bool isConcrete() const;
    bool isFunction() const noexcept { return kind_ == TypeKind::Fun; }
    bool isString() const noexcept { return kind_ == TypeKind::List && parts_[0].kind_ == TypeKind::Char; }
    /// True when no function type occurs anywhere inside.
    bool isData() const;

    /// Haskell-style rendering: `Int`, `[Char]`, `(Int, Bool)`, `Int -> Bool`.
    std::string str() const;

    friend bool operator==(const Type& a, const Type& b);
    friend std::strong_ordering operator<=>(const Type& a, const Type& b);

private:
    explicit Type(TypeKind kind) : kind_(kind) {}

    TypeKind kind_ = TypeKind::Int;
    std::vector<Type> parts_;
    std::string var_;
};

using TypeSet = std::set<Type>;
using Bindings = std::map<std::string, Type>;

Type substitute(const Type& pattern, const Bindings& bindings);

/// One-way matching of a (possibly polymorphic) pattern against a concrete type.
/// Extends `bindings` on success; leaves it in an unspecified state on failure.
bool match(const Type& pattern, const Type& concrete, Bindings& bindings);

/// Collects type-variable names in first-occurrence order.
void collectVars(const Type& t, std::vector<std::string>& out);

/// Parses the rendering produced by Type::str(). Also accepts `String`.
std::optional<Type> parseType(std::string_view text);

}  // namespace tgp

#endif  // TGP_TYPES_HPP
