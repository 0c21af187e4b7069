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

#include "tgp/type_tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tgp {

namespace {

// Whether a function-typed slot can be filled by a node at depth `d`.
using FunSlotOk = std::function<bool(const Type&, int d)>;

bool dataParamsIn(const Signature& sig, const TypeSet& row)
{
    return std::all_of(sig.params.begin(), sig.params.end(),
                       [&](const Type& p) { return p.isFunction() || row.count(p) > 0; });
}

bool funParamsOk(const Signature& sig, const FunSlotOk& ok, int d)
{
    return std::all_of(sig.params.begin(), sig.params.end(), [&](const Type& p) { return !p.isFunction() || ok(p, d); });
}

std::vector<TypeSet> growRows(const GrammarInstance& g, int maxDepth, const TypeSet& terminals, const FunSlotOk& ok)
{
    std::vector<TypeSet> rows{terminals};
    for (int d = 1; d <= maxDepth; ++d) {
        TypeSet next = rows.back();
        for (const auto& sig : g.signatures()) {
            if (funParamsOk(*sig, ok, d) && dataParamsIn(*sig, rows.back())) next.insert(sig->ret);
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

std::string dumpRows(const TypeTable& t)
{
    std::ostringstream os;
    for (int d = 0; d <= t.maxDepth(); ++d) {
        os << d << ':';
        for (const auto& ty : t.row(d)) os << ' ' << ty.str();
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string TypeTable::dump() const
{
    return std::string(method_ == Method::Grow ? "grow\n" : "full\n") + dumpRows(*this);
}

const LambdaTables* LambdaTableSet::forArg(const Type& argType) const
{
    auto it = tables_.find(argType);
    return it == tables_.end() ? nullptr : &it->second;
}

bool LambdaTableSet::canProduce(const Type& fun) const
{
    if (!fun.isFunction()) return false;
    const auto* t = forArg(fun.arg());
    return t && t->withParam.row(t->withParam.maxDepth()).count(fun.ret()) > 0;
}

std::string LambdaTableSet::dump() const
{
    std::ostringstream os;
    for (const auto& [arg, t] : tables_) os << "lambda " << arg.str() << " ->\n" << dumpRows(t.withParam);
    return os.str();
}

TypeTable buildTable(const GrammarInstance& grammar, Method method, int maxDepth, const TypeSet& terminalTypes,
                     const LambdaTableSet* lambdas)
{
    FunSlotOk ok = [lambdas](const Type& f, int) { return lambdas && lambdas->canProduce(f); };
    if (method == Method::Grow) return TypeTable(Method::Grow, growRows(grammar, maxDepth, terminalTypes, ok));

    std::vector<TypeSet> rows{terminalTypes};
    for (int d = 1; d <= maxDepth; ++d) {
        TypeSet next;
        for (const auto& sig : grammar.signatures()) {
            if (funParamsOk(*sig, ok, d) && dataParamsIn(*sig, rows.back())) next.insert(sig->ret);
        }
        rows.push_back(std::move(next));
    }
    return TypeTable(Method::Full, std::move(rows));
}

LambdaTableSet buildLambdaTables(const GrammarInstance& grammar, const TypeSet& argTypes, int maxLambdaDepth)
{
    // The nested identity lambda is itself one level deep.
    FunSlotOk nestedOk = [](const Type& f, int d) { return d >= 2 && identityFillable(f); };
    TypeSet constants(grammar.universe().types.begin(), grammar.universe().types.end());

    std::map<Type, LambdaTables> tables;
    for (const auto& arg : argTypes) {
        TypeSet freeTerminals = constants;
        freeTerminals.insert(arg);
        auto freeRows = growRows(grammar, maxLambdaDepth, freeTerminals, nestedOk);

        // A signature reaches the parameter when one of its data slots can.
        std::vector<TypeSet> rows{TypeSet{arg}};
        for (int d = 1; d <= maxLambdaDepth; ++d) {
            TypeSet next = rows.back();
            for (const auto& sig : grammar.signatures()) {
                if (!funParamsOk(*sig, nestedOk, d) || !dataParamsIn(*sig, freeRows[d - 1])) continue;
                bool reaches = std::any_of(sig->params.begin(), sig->params.end(),
                                           [&](const Type& p) { return !p.isFunction() && rows.back().count(p); });
                if (reaches) next.insert(sig->ret);
            }
            rows.push_back(std::move(next));
        }
        tables.emplace(arg, LambdaTables{TypeTable(Method::Grow, std::move(rows)),
                                         TypeTable(Method::Grow, std::move(freeRows))});
    }
    return LambdaTableSet(maxLambdaDepth, std::move(tables));
}

bool canProduce(const TypeTable& table, const Type& t, int depthBudget)
{
    if (depthBudget < 0 || table.maxDepth() < 0) return false;
    if (table.method() == Method::Grow) return table.row(std::min(depthBudget, table.maxDepth())).count(t) > 0;
    return depthBudget <= table.maxDepth() && table.row(depthBudget).count(t) > 0;
}

}  // namespace tgp
