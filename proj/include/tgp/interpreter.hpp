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

#ifndef TGP_INTERPRETER_HPP
#define TGP_INTERPRETER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "tgp/tree.hpp"
#include "tgp/value.hpp"

namespace tgp {

enum class ErrorKind : std::uint8_t {
    DivByZero,
    ModByZero,
    EmptyListHead,
    NonFiniteFloat,
    ZeroStepRange,
    ResourceExhausted,
};

std::string_view errorKindName(ErrorKind kind);

struct RuntimeError {
    ErrorKind kind;
    Path path;

    std::string str() const;
    friend bool operator==(const RuntimeError&, const RuntimeError&) = default;
};

struct EvalBudget {
    std::int64_t maxSteps = 100000;
    std::size_t maxListLength = 10000;
};

class EvalResult {
public:
    EvalResult(Value v) : result_(std::move(v)) {}
    EvalResult(RuntimeError e) : result_(std::move(e)) {}

    bool ok() const noexcept { return std::holds_alternative<Value>(result_); }
    const Value& value() const { return std::get<Value>(result_); }
    const RuntimeError& error() const { return std::get<RuntimeError>(result_); }
    /// `value.str()` or `error:<Kind>`.
    std::string str() const;

    friend bool operator==(const EvalResult&, const EvalResult&) = default;

private:
    std::variant<Value, RuntimeError> result_;
};

/// Strict, deterministic evaluation. Integer division and modulus are floored,
/// Int arithmetic wraps at 32 bits, and any non-finite Float is an error.
/// `If` evaluates only the selected branch.
EvalResult evaluate(const Tree& tree, std::span<const Value> args, const EvalBudget& budget = {});

}  // namespace tgp

#endif  // TGP_INTERPRETER_HPP
