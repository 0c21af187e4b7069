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

#ifndef TGP_TYPE_TABLES_HPP
#define TGP_TYPE_TABLES_HPP

#include <map>
#include <string>
#include <vector>

#include "tgp/grammar.hpp"

namespace tgp {

enum class Method : std::uint8_t { Grow, Full };

/// Type-possibility table: which types a tree of a given depth can produce.
/// Grow rows are cumulative; full rows hold types whose trees have every
/// leaf at exactly that depth.
class TypeTable {
public:
    TypeTable() = default;
    TypeTable(Method method, std::vector<TypeSet> rows) : method_(method), rows_(std::move(rows)) {}

    Method method() const noexcept { return method_; }
    int maxDepth() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    const TypeSet& row(int depth) const { return rows_.at(static_cast<std::size_t>(depth)); }
    std::string dump() const;

private:
    Method method_ = Method::Grow;
    std::vector<TypeSet> rows_;
};

/// Tables for lambda bodies over one parameter type.
struct LambdaTables {
    /// Types producible by a body that mentions the parameter.
    TypeTable withParam;
    /// Types producible by any body subtree, parameter optional.
    TypeTable free;
};

class LambdaTableSet {
public:
    LambdaTableSet() = default;
    LambdaTableSet(int maxDepth, std::map<Type, LambdaTables> tables) : maxDepth_(maxDepth), tables_(std::move(tables)) {}

    int maxDepth() const noexcept { return maxDepth_; }
    const LambdaTables* forArg(const Type& argType) const;
    /// Whether a lambda of function type `fun` can be generated.
    bool canProduce(const Type& fun) const;
    const std::map<Type, LambdaTables>& tables() const noexcept { return tables_; }
    std::string dump() const;

private:
    int maxDepth_ = 0;
    std::map<Type, LambdaTables> tables_;
};

/// Nested lambdas are restricted to `\y -> y`, so a function-typed slot inside
/// a lambda body is fillable only when argument and result types agree.
inline bool identityFillable(const Type& fun)
{
    return fun.isFunction() && fun.arg() == fun.ret();
}

/// `lambdas` decides which function-typed parameters can be filled; without
/// it, higher-order signatures are never admitted.
TypeTable buildTable(const GrammarInstance& grammar, Method method, int maxDepth, const TypeSet& terminalTypes,
                     const LambdaTableSet* lambdas = nullptr);

LambdaTableSet buildLambdaTables(const GrammarInstance& grammar, const TypeSet& argTypes, int maxLambdaDepth);

bool canProduce(const TypeTable& table, const Type& t, int depthBudget);

}  // namespace tgp

#endif  // TGP_TYPE_TABLES_HPP
