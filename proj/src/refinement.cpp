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

#include "tgp/refinement.hpp"

#include <map>

namespace tgp {

namespace {

constexpr std::string_view kDefaultLaws = R"(# Conditionals
(If True ?a ?b) => ?a
(If False ?a ?b) => ?b
(If ?c ?a ?a) => ?a
# Comparisons of a term with itself
(GtInt ?a ?a) => False
(LtInt ?a ?a) => False
(EqInt ?a ?a) => True
(EqChar ?a ?a) => True
# Booleans
(Not (Not ?a)) => ?a
(And ?a True) => ?a
(And True ?a) => ?a
(Or ?a False) => ?a
(Or False ?a) => ?a
# Pairs
(Fst (ToPair ?a ?b)) => ?a
(Snd (ToPair ?a ?b)) => ?b
# Lists
(Len (Singleton ?b)) => 1
(Reverse (Reverse ?a)) => ?a
(Reverse (Singleton ?a)) => (Singleton ?a)
(Head (Singleton ?a)) => ?a
(Head (Cons ?a ?b)) => ?a
)";

bool isMeta(const SExpr& e)
{
    return !e.isList && e.atom.size() > 1 && e.atom[0] == '?';
}

void checkRuleSide(const SExpr& e, bool isPattern, std::map<std::string, int>& metas)
{
    if (isMeta(e)) {
        ++metas[e.atom];
        return;
    }
    if (!e.isList) {
        parseLiteral(e.atom);
        return;
    }
    if (e.list.empty() || e.list[0].isList || !opFromName(e.list[0].atom))
        throw ParseError("law operator expected in " + (e.list.empty() ? std::string("()") : e.list[0].atom));
    const auto& sym = symbolFor(*opFromName(e.list[0].atom));
    if (e.list.size() - 1 != sym.params.size()) throw ParseError("wrong arity for " + e.list[0].atom + " in law");
    for (std::size_t i = 1; i < e.list.size(); ++i) checkRuleSide(e.list[i], isPattern, metas);
}

using Match = std::map<std::string, Tree>;

bool matches(const SExpr& p, const Tree& t, Match& m)
{
    if (isMeta(p)) {
        auto [it, fresh] = m.emplace(p.atom, t);
        return fresh || it->second == t;
    }
    if (!p.isList) {
        if (t.kind() != NodeKind::Const) return false;
        return parseLiteral(p.atom).first == t.node().value;
    }
    if (t.kind() != NodeKind::Apply || opName(t.node().sig->op) != p.list[0].atom) return false;
    const auto& kids = t.children();
    if (kids.size() + 1 != p.list.size()) return false;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (!matches(p.list[i + 1], kids[i], m)) return false;
    }
    return true;
}

/// Builds the replacement; `target` is the type of the matched node. Throws
/// on ill-typed instantiation.
Tree build(const SExpr& r, const Match& m, const Type& target)
{
    if (isMeta(r)) return m.at(r.atom);
    if (!r.isList) {
        auto [value, type] = parseLiteral(r.atom);
        return Tree::constant(value, type ? *type : target);
    }
    const auto& sym = symbolFor(*opFromName(r.list[0].atom));
    std::vector<Tree> kids;
    Bindings b;
    for (std::size_t i = 1; i < r.list.size(); ++i) {
        const Type& param = sym.params[i - 1];
        Tree k = build(r.list[i], m, param.isConcrete() ? param : Type::Var("?"));
        if (!match(param, k.type(), b)) throw TypeError({}, param.str(), k.type().str(), "law replacement");
        kids.push_back(std::move(k));
    }
    if (!match(sym.ret, target, b)) throw TypeError({}, sym.ret.str(), target.str(), "law replacement");
    return Tree::apply(instantiate(sym, b), std::move(kids));
}

/// First applicable rewrite in leftmost-innermost order.
bool rewriteOnce(const Tree& root, const Tree& t, Path& path, std::span<const LawRule> laws, Tree& out)
{
    const auto& kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (rewriteOnce(root, kids[i], path, laws, out)) return true;
        path.pop_back();
    }
    if (t.kind() != NodeKind::Apply) return false;
    for (const auto& law : laws) {
        Match m;
        if (!matches(law.pattern, t, m)) continue;
        try {
            Tree rep = build(law.replacement, m, t.type());
            if (rep.type() != t.type() || nodeCount(rep) > nodeCount(t) || rep == t) continue;
            Tree candidate = replaceAt(root, path, std::move(rep));
            typeOf(candidate);
            out = std::move(candidate);
            return true;
        } catch (const std::exception&) {
            continue;
        }
    }
    return false;
}

Tree fold(const Tree& t, const EvalBudget& budget)
{
    if (t.kind() == NodeKind::Apply && !containsArg(t) && !containsFreeParam(t)) {
        EvalResult r = evaluate(t, {}, budget);
        if (r.ok()) return Tree::constant(r.value(), t.type());
    }
    if (t.children().empty()) return t;
    std::vector<Tree> kids;
    bool changed = false;
    for (const auto& k : t.children()) {
        kids.push_back(fold(k, budget));
        changed = changed || !(kids.back().ptr() == k.ptr());
    }
    if (!changed) return t;
    if (t.kind() == NodeKind::Lambda) return Tree::lambda(t.type().arg(), std::move(kids[0]));
    return Tree::apply(t.node().sig, std::move(kids));
}

}  // namespace

std::vector<LawRule> parseLaws(std::string_view text)
{
    std::vector<LawRule> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        auto exprs = readAllSExprs(line);
        std::size_t arrow = line.find("=>");
        if (exprs.empty() && arrow == std::string_view::npos) continue;
        if (arrow == std::string_view::npos) throw ParseError("missing '=>' in law: " + std::string(line));
        auto lhs = readAllSExprs(line.substr(0, arrow));
        auto rhs = readAllSExprs(line.substr(arrow + 2));
        if (lhs.size() != 1 || rhs.size() != 1) throw ParseError("law needs one pattern and one replacement: " + std::string(line));
        if (!lhs[0].isList) throw ParseError("law pattern must be an application: " + std::string(line));
        std::map<std::string, int> pm, rm;
        checkRuleSide(lhs[0], true, pm);
        checkRuleSide(rhs[0], false, rm);
        for (const auto& [name, n] : rm) {
            if (!pm.count(name)) throw ParseError("unbound metavariable " + name + " in law: " + std::string(line));
        }
        out.push_back({lhs[0], rhs[0], std::string(line)});
    }
    return out;
}

std::string_view defaultLawsText()
{
    return kDefaultLaws;
}

const std::vector<LawRule>& defaultLaws()
{
    static const std::vector<LawRule> laws = parseLaws(kDefaultLaws);
    return laws;
}

Tree foldConstants(const Tree& tree, const EvalBudget& budget)
{
    return fold(tree, budget);
}

Tree applyLaws(const Tree& tree, std::span<const LawRule> laws)
{
    Tree current = tree;
    std::size_t limit = static_cast<std::size_t>(nodeCount(tree)) * std::max<std::size_t>(laws.size(), 1) + 1;
    for (std::size_t i = 0; i < limit; ++i) {
        Path path;
        Tree next;
        if (!rewriteOnce(current, current, path, laws, next)) break;
        current = std::move(next);
    }
    return current;
}

Tree localSearch(const Tree& tree, std::span<const Case> cases, const EvalBudget& budget)
{
    Tree current = tree;
    double currentAcc = accuracyOf(current, cases, budget);
    std::size_t k = 0;
    while (true) {
        auto positions = mainPositions(current);
        if (k >= positions.size()) break;
        const Position& at = positions[k];
        Tree best = current;
        double bestAcc = currentAcc;
        int bestNodes = nodeCount(best);
        if (at.subtree->kind() == NodeKind::Apply) {
            for (const auto& child : at.subtree->children()) {
                if (child.type() != at.subtree->type()) continue;
                Tree candidate = replaceAt(current, at.path, child);
                double acc = accuracyOf(candidate, cases, budget);
                int nodes = nodeCount(candidate);
                if (acc >= bestAcc && nodes < bestNodes) {
                    best = std::move(candidate);
                    bestAcc = acc;
                    bestNodes = nodes;
                }
            }
        }
        if (best.ptr() != current.ptr()) {
            current = std::move(best);
            currentAcc = bestAcc;
        } else {
            ++k;
        }
    }
    return current;
}

Tree refine(const Tree& tree, std::span<const Case> cases, std::span<const LawRule> laws, const EvalBudget& budget)
{
    Tree t = foldConstants(tree, budget);
    t = applyLaws(t, laws);
    t = localSearch(t, cases, budget);
    if (nodeCount(t) > nodeCount(tree) || accuracyOf(t, cases, budget) < accuracyOf(tree, cases, budget)) return tree;
    return t;
}

}  // namespace tgp
