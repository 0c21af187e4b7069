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

#include <doctest.h>

#include "tgp/benchmarks.hpp"
#include "tgp/sexpr.hpp"

using namespace tgp;

namespace {

const std::vector<Type> kInt3{Type::Int(), Type::Int(), Type::Int()};

Tree median()
{
    return parseTree("(MinInt (MaxInt (MinInt x2 x1) x0) (MaxInt x1 x2))", kInt3);
}

}  // namespace

TEST_CASE("type rendering and parsing")
{
    Type t = Type::Fun(Type::List(Type::Pair(Type::Int(), Type::Char())), Type::Bool());
    CHECK(t.str() == "[(Int, Char)] -> Bool");
    CHECK(parseType(t.str()) == t);
    CHECK(parseType("String") == Type::String());
    CHECK(Type::String().str() == "[Char]");
    CHECK_FALSE(parseType("[Int").has_value());
    CHECK(Type::Var("a").isConcrete() == false);
    CHECK(Type::List(Type::Int()).isData());
    CHECK_FALSE(Type::Fun(Type::Int(), Type::Int()).isData());
}

TEST_CASE("type matching binds variables consistently")
{
    Bindings b;
    Type pat = Type::Fun(Type::Var("a"), Type::Var("b"));
    CHECK(match(pat, Type::Fun(Type::Int(), Type::Bool()), b));
    CHECK(b.at("a") == Type::Int());
    CHECK(b.at("b") == Type::Bool());
    Bindings c;
    CHECK_FALSE(match(Type::Pair(Type::Var("a"), Type::Var("a")), Type::Pair(Type::Int(), Type::Bool()), c));
    CHECK(substitute(Type::List(Type::Var("a")), {{"a", Type::Char()}}) == Type::String());
}

TEST_CASE("typeOf on small trees")
{
    auto add = instantiate(symbolFor(Op::AddInt), {});
    Tree ok = Tree::apply(add, {Tree::constant(Value::Int(1), Type::Int()), Tree::constant(Value::Int(2), Type::Int())});
    CHECK(typeOf(ok) == Type::Int());

    Tree bad = Tree::apply(add, {Tree::constant(Value::Int(1), Type::Int()), Tree::constant(Value::Bool(true), Type::Bool())});
    try {
        typeOf(bad);
        FAIL("expected a TypeError");
    } catch (const TypeError& e) {
        CHECK(e.path() == Path{1});
        CHECK(e.expected() == "Int");
        CHECK(e.actual() == "Bool");
    }
    CHECK(typeOf(median(), kInt3, Type::Int()) == Type::Int());
    CHECK_THROWS_AS(typeOf(median(), kInt3, Type::Bool()), TypeError);
}

TEST_CASE("lambda rules are enforced by typeOf")
{
    std::vector<Type> li{Type::List(Type::Int())};
    auto maxSig = instantiate(symbolFor(Op::MaxInt), {});
    auto mapSig = instantiate(symbolFor(Op::Map), {{"a", Type::Int()}, {"b", Type::Int()}});
    Tree x0 = Tree::arg(0, li[0]);
    Tree zero = Tree::constant(Value::Int(0), Type::Int());

    // Body ignoring the parameter.
    Tree noParam = Tree::lambda(Type::Int(), Tree::apply(maxSig, {zero, zero}));
    CHECK_THROWS_AS(typeOf(Tree::apply(mapSig, {noParam, x0})), TypeError);

    // Parameter outside a lambda.
    CHECK_THROWS_AS(typeOf(Tree::apply(maxSig, {Tree::param(Type::Int()), zero})), TypeError);

    // Nested lambda that is not the identity.
    auto mapLi = instantiate(symbolFor(Op::Map), {{"a", Type::Int()}, {"b", Type::Int()}});
    auto sumSig = instantiate(symbolFor(Op::SumInts), {});
    auto singleton = instantiate(symbolFor(Op::Singleton), {{"a", Type::Int()}});
    Tree inner = Tree::lambda(Type::Int(), Tree::apply(maxSig, {Tree::param(Type::Int()), zero}));
    Tree body = Tree::apply(sumSig, {Tree::apply(mapLi, {inner, Tree::apply(singleton, {Tree::param(Type::Int())})})});
    CHECK_THROWS_AS(typeOf(Tree::apply(mapSig, {Tree::lambda(Type::Int(), body), x0})), TypeError);

    Tree identityBody =
        Tree::apply(sumSig, {Tree::apply(mapLi, {Tree::identity(Type::Int()), Tree::apply(singleton, {Tree::param(Type::Int())})})});
    CHECK(typeOf(Tree::apply(mapSig, {Tree::lambda(Type::Int(), identityBody), x0})) == li[0]);

    // Argument inside a lambda body.
    Tree withArg = Tree::lambda(Type::Int(), Tree::apply(maxSig, {Tree::param(Type::Int()), Tree::apply(sumSig, {x0})}));
    CHECK_THROWS_AS(typeOf(Tree::apply(mapSig, {withArg, x0})), TypeError);
}

TEST_CASE("node counts of reference solutions")
{
    CHECK(nodeCount(median()) == 9);
    CHECK(nodeCount(Tree::constant(Value::Int(5), Type::Int())) == 1);
    std::map<std::string, int> expected = {{"median", 9},         {"compare-string-lengths", 11},
                                           {"smallest", 7},       {"negative-to-zero", 3},
                                           {"count-odds", 4},     {"number-io", 4},
                                           {"vectors-summed", 5}, {"sum-of-squares", 7},
                                           {"vector-average", 6}};
    for (const auto& [name, n] : expected) {
        CAPTURE(name);
        CHECK(nodeCount(solutionTree(findBenchmark(name))) == n);
    }
}

TEST_CASE("depth conventions")
{
    auto add = instantiate(symbolFor(Op::AddInt), {});
    Tree one = Tree::constant(Value::Int(1), Type::Int());
    Tree two = Tree::constant(Value::Int(2), Type::Int());
    CHECK(depth(one) == 0);
    CHECK(depth(Tree::apply(add, {one, two})) == 1);
    CHECK(depth(Tree::apply(add, {Tree::apply(add, {Tree::arg(0, Type::Int()), one}), two})) == 2);

    Tree neg = solutionTree(findBenchmark("negative-to-zero"));
    CHECK(depth(neg) == 3);
    CHECK(mainDepth(neg) == 1);
    CHECK(maxLambdaBodyDepth(neg) == 1);
    CHECK(withinDepthLimits(neg, 1, 1));
    CHECK_FALSE(withinDepthLimits(neg, 0, 1));
    CHECK_FALSE(withinDepthLimits(neg, 1, 0));
}

TEST_CASE("subtree replacement and positions")
{
    Tree m = median();
    auto positions = mainPositions(m);
    REQUIRE(positions.size() == 9);
    CHECK(positions[0].path.empty());
    CHECK(positions[1].path == Path{0});
    CHECK(positions[2].path == Path{0, 0});
    CHECK(positions[2].depth == 2);
    Tree r = replaceAt(m, {1}, Tree::arg(0, Type::Int()));
    CHECK(toSExpr(r) == "(MinInt (MaxInt (MinInt x2 x1) x0) x0)");
    CHECK(toSExpr(m) == "(MinInt (MaxInt (MinInt x2 x1) x0) (MaxInt x1 x2))");
    CHECK(subtreeAt(m, {0, 1}) == Tree::arg(0, Type::Int()));

    Tree neg = solutionTree(findBenchmark("negative-to-zero"));
    CHECK(mainPositions(neg).size() == 3);
    CHECK(containsArg(neg));
    CHECK_FALSE(containsFreeParam(neg));
    CHECK(containsFreeParam(neg.children()[0].children()[0]));
}

TEST_CASE("fitness ordering")
{
    CHECK(Fitness::error(0.0) < Fitness::error(1.0));
    CHECK(Fitness::error(1e300) < Fitness::worst());
    CHECK_FALSE(Fitness::worst() < Fitness::worst());
    CHECK(Fitness::error(0.0).isPerfect());
    CHECK(Fitness::worst().str() == "inf");
}
