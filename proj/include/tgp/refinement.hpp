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

#ifndef TGP_REFINEMENT_HPP
#define TGP_REFINEMENT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/benchmarks.hpp"
#include "tgp/sexpr.hpp"

namespace tgp {

/// Rewrite rule over s-expressions. Atoms starting with `?` are
/// metavariables; a repeated metavariable requires structurally equal
/// subtrees. Other atoms are literals.
struct LawRule {
    SExpr pattern;
    SExpr replacement;
    std::string text;
};

/// One rule per line: `pattern => replacement`. `#` and `;` start comments.
/// Throws ParseError on malformed rules or unknown operations.
std::vector<LawRule> parseLaws(std::string_view text);
const std::vector<LawRule>& defaultLaws();
std::string_view defaultLawsText();

/// Replaces closed subtrees (no argument, no free lambda parameter) by the
/// constant they evaluate to; subtrees that fail are kept.
Tree foldConstants(const Tree& tree, const EvalBudget& budget = {});
/// Leftmost-innermost rewriting to a fixpoint. Rewrites that would grow the
/// tree or break typing are skipped.
Tree applyLaws(const Tree& tree, std::span<const LawRule> laws);
/// Greedy hoisting of same-typed children over the main program, keeping a
/// change only when training accuracy does not drop and the tree shrinks.
Tree localSearch(const Tree& tree, std::span<const Case> cases, const EvalBudget& budget = {});
/// foldConstants, applyLaws, localSearch. Returns the input unchanged if the
/// pipeline would lower accuracy or grow the tree.
Tree refine(const Tree& tree, std::span<const Case> cases, std::span<const LawRule> laws, const EvalBudget& budget = {});

}  // namespace tgp

#endif  // TGP_REFINEMENT_HPP
