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

#include "oracles.hpp"

#include <algorithm>

namespace tgp::testing {

namespace {

using Path = std::vector<int>;

int countNodes(const Tree& t)
{
    if (t.kind() == NodeKind::Lambda) return 1;
    int n = 1;
    for (const auto& c : t.children()) n += countNodes(c);
    return n;
}

void collect(const Tree& t, Path& here, std::vector<Path>& out)
{
    out.push_back(here);
    if (t.kind() == NodeKind::Lambda) return;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        here.push_back(static_cast<int>(i));
        collect(t.children()[i], here, out);
        here.pop_back();
    }
}

const Tree& at(const Tree& t, const Path& p, std::size_t i = 0)
{
    return i == p.size() ? t : at(t.children()[static_cast<std::size_t>(p[i])], p, i + 1);
}

Tree rebuild(const Tree& t, const Path& p, const Tree& with, std::size_t i = 0)
{
    if (i == p.size()) return with;
    std::vector<Tree> kids = t.children();
    auto k = static_cast<std::size_t>(p[i]);
    kids[k] = rebuild(kids[k], p, with, i + 1);
    return Tree::apply(t.node().sig, std::move(kids));
}

double acc(const Tree& t, std::span<const Case> cases, const EvalBudget& budget)
{
    int hits = 0;
    for (const auto& c : cases) {
        auto r = evaluate(t, c.args, budget);
        hits += r.ok() && valuesMatch(r.value(), c.expected);
    }
    return static_cast<double>(hits) / static_cast<double>(cases.size());
}

bool sameTree(const Tree& a, const Tree& b)
{
    const Node& x = a.node();
    const Node& y = b.node();
    if (x.kind != y.kind || !(x.type == y.type) || x.children.size() != y.children.size()) return false;
    if (x.kind == NodeKind::Apply && !(*x.sig == *y.sig)) return false;
    if (x.kind == NodeKind::Arg && x.argIndex != y.argIndex) return false;
    if (x.kind == NodeKind::Const && !(x.value == y.value)) return false;
    for (std::size_t i = 0; i < x.children.size(); ++i) {
        if (!sameTree(x.children[i], y.children[i])) return false;
    }
    return true;
}

bool mentionsParam(const Tree& t)
{
    if (t.kind() == NodeKind::Param) return true;
    if (t.kind() == NodeKind::Lambda) return false;
    for (const auto& c : t.children()) {
        if (mentionsParam(c)) return true;
    }
    return false;
}

int height(const Tree& t, bool throughLambdas)
{
    if (!throughLambdas && t.kind() == NodeKind::Lambda) return 0;
    int h = 0;
    for (const auto& c : t.children()) h = std::max(h, 1 + height(c, throughLambdas));
    return h;
}

std::string checkBody(const Tree& t, bool nested)
{
    if (t.kind() == NodeKind::Arg) return "argument inside a lambda body";
    if (t.kind() == NodeKind::Lambda) {
        if (nested) return "lambda nested more than one level";
        const Tree& body = t.children()[0];
        if (body.kind() != NodeKind::Param) return "nested lambda is not the identity";
        return "";
    }
    for (const auto& c : t.children()) {
        if (auto v = checkBody(c, nested); !v.empty()) return v;
    }
    return "";
}

std::string checkMain(const Tree& t, int maxLambdaDepth)
{
    if (t.kind() == NodeKind::Param) return "lambda parameter outside a lambda";
    if (t.kind() == NodeKind::Lambda) {
        const Tree& body = t.children()[0];
        if (!mentionsParam(body)) return "lambda body ignores its parameter";
        if (height(body, true) > maxLambdaDepth) return "lambda body too deep";
        return checkBody(body, false);
    }
    for (const auto& c : t.children()) {
        if (auto v = checkMain(c, maxLambdaDepth); !v.empty()) return v;
    }
    return "";
}

}  // namespace

bool bruteProducible(const GrammarInstance& g, const TypeSet& terminals, const Type& t, int d,
                     const LambdaTableSet* lambdas)
{
    if (terminals.count(t)) return true;
    if (d <= 0) return false;
    for (const auto& sig : g.signatures()) {
        if (sig->ret != t) continue;
        bool ok = true;
        for (const auto& p : sig->params) {
            if (p.isFunction()) ok = lambdas && lambdas->canProduce(p);
            else ok = bruteProducible(g, terminals, p, d - 1, lambdas);
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

Tree bruteLocalSearch(const Tree& tree, std::span<const Case> cases, const EvalBudget& budget)
{
    Tree cur = tree;
    std::size_t k = 0;
    for (;;) {
        std::vector<Path> paths;
        Path here;
        collect(cur, here, paths);
        if (k >= paths.size()) return cur;
        const Tree& node = at(cur, paths[k]);
        Tree best = cur;
        if (node.kind() == NodeKind::Apply) {
            for (const auto& child : node.children()) {
                if (!(child.type() == node.type())) continue;
                Tree cand = rebuild(cur, paths[k], child);
                if (acc(cand, cases, budget) >= acc(best, cases, budget) && countNodes(cand) < countNodes(best))
                    best = cand;
            }
        }
        if (sameTree(best, cur)) ++k;
        else cur = best;
    }
}

std::string lambdaViolation(const Tree& tree, int maxDepth, int maxLambdaDepth)
{
    if (height(tree, false) > maxDepth) return "main program too deep";
    return checkMain(tree, maxLambdaDepth);
}

}  // namespace tgp::testing
