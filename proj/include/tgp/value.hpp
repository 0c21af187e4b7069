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

#ifndef TGP_VALUE_HPP
#define TGP_VALUE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/types.hpp"

namespace tgp {

struct Node;

/// Runtime value. Lists and pairs share their element storage, so copies are cheap.
class Value {
public:
    enum class Kind : std::uint8_t { Int, Float, Bool, Char, List, Pair, Closure };

    Value() = default;

    static Value Int(std::int32_t v);
    static Value Float(float v);
    static Value Bool(bool v);
    static Value Char(char32_t v);
    static Value List(std::vector<Value> items);
    static Value Pair(Value first, Value second);
    /// Decodes UTF-8 into a list of characters.
    static Value String(std::string_view utf8);
    static Value Closure(std::shared_ptr<const Node> lambda);

    Kind kind() const noexcept { return kind_; }

    std::int32_t asInt() const;
    float asFloat() const;
    bool asBool() const;
    char32_t asChar() const;
    const std::vector<Value>& items() const;
    const Value& first() const;
    const Value& second() const;
    const std::shared_ptr<const Node>& closure() const;

    /// Non-empty list whose elements are all characters.
    bool isString() const;
    /// UTF-8 encoding of a character list.
    std::string toUtf8() const;

    /// Structural check against a concrete type. Empty lists match any list type.
    bool hasType(const Type& t) const;
    /// Type recoverable from the value alone; nullopt when an empty list hides it.
    std::optional<Type> inferType() const;

    /// Display form: `3`, `1.5`, `True`, `'a'`, `"ab"`, `[1, 2]`, `(1, True)`.
    std::string str() const;

    friend bool operator==(const Value& a, const Value& b);

private:
    Kind kind_ = Kind::Int;
    union {
        std::int32_t i;
        float f;
        bool b;
        char32_t c;
    } scalar_{0};
    std::shared_ptr<const std::vector<Value>> items_;
    std::shared_ptr<const Node> closure_;
};

/// Shortest decimal text that reads back to the same float; always has a `.` or exponent.
std::string formatFloat(float v);
std::string encodeUtf8(char32_t c);
std::u32string decodeUtf8(std::string_view s);

}  // namespace tgp

#endif  // TGP_VALUE_HPP
