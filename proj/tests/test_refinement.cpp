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

#include "support/oracles.hpp"
#include "tgp/evolution.hpp"
#include "tgp/refinement.hpp"

using namespace tgp;

namespace {

std::string folded(const std::string& text, std::vector<Type> args = {})
{
    return toSExpr(foldConstants(parseTree(text, args)));
}

std::string lawed(const std::string& text, std::vector<Type> args)
{
    return toSExpr(applyLaws(parseTree(text, args), defaultLaws()));
}

const std::vector<Type> kInts{Type::Int(), Type::Int(), Type::Int()};

}  // namespace

TEST_CASE("constant folding")
{
    CHECK(folded("(Head (Cons (MultInt 4 5) (Singleton (AddInt 1 2))))") == "20");
    CHECK(folded("(AddInt x0 (MultInt 2 3))", kInts) == "(AddInt x0 6)");
    CHECK(folded("(AddInt x0 (DivInt 2 0))", kInts) == "(AddInt x0 (DivInt 2 0))");
    CHECK(folded("(Map (lambda Int (AddInt y (SubInt 5 2))) x0)", {Type::List(Type::Int())}) ==
          "(Map (lambda Int (AddInt y 3)) x0)");
    CHECK(folded("(Reverse (Range 1 3 1))") == "[3,2,1]");
    CHECK(folded("(Filter (lambda Int (GtInt y 0)) [1,-2])") == "[1]");
}

TEST_CASE("algebraic laws")
{
    CHECK(lawed("(If True x0 x1)", kInts) == "x0");
    CHECK(lawed("(If (GtInt x0 x1) x2 x2)", kInts) == "x2");
    CHECK(lawed("(If (LtInt x0 x0) x1 x2)", kInts) == "x2");
    CHECK(lawed("(Not (Not (EqInt x0 x1)))", kInts) == "(EqInt x0 x1)");
    CHECK(lawed("(And (EqInt x1 x1) (GtInt x0 x2))", kInts) == "(GtInt x0 x2)");
    CHECK(lawed("(Head (Reverse (Reverse (Singleton x0))))", kInts) == "x0");
    CHECK(lawed("(Len (Singleton x2))", kInts) == "1");
    CHECK(lawed("(Fst (ToPair x0 x1))", kInts) == "x0");
    CHECK(lawed("(AddInt x0 x1)", kInts) == "(AddInt x0 x1)");
}

TEST_CASE("laws keep lambdas valid")
{
    // Rewriting the body to a constant would leave the lambda without its parameter.
    std::vector<Type> list{Type::List(Type::Int())};
    auto t = parseTree("(Filter (lambda Int (EqInt y y)) x0)", list);
    Tree r = applyLaws(t, defaultLaws());
    CHECK(toSExpr(r) == "(Filter (lambda Int (EqInt y y)) x0)");
    CHECK(testing::lambdaViolation(r, 15, 3) == "");
}

TEST_CASE("law files")
{
    auto laws = parseLaws("# comment\n(MinInt ?a ?a) => ?a ; trailing\n\n(Not True) => False\n");
    REQUIRE(laws.size() == 2);
    CHECK(toSExpr(applyLaws(parseTree("(MinInt (AddInt x0 1) (AddInt x0 1))", kInts), laws)) == "(AddInt x0 1)");
    CHECK_THROWS_AS(parseLaws("(MinInt ?a ?a) ?a"), ParseError);
    CHECK_THROWS_AS(parseLaws("(Frobnicate ?a) => ?a"), ParseError);
    CHECK_THROWS_AS(parseLaws("(Not ?a ?b) => ?a"), ParseError);
    CHECK_THROWS_AS(parseLaws("(Not ?a) => ?b"), ParseError);
    CHECK(parseLaws(defaultLawsText()).size() == defaultLaws().size());
}

TEST_CASE("local search removes bloat")
{
    std::vector<Case> cases{{{Value::Int(0), Value::Int(1), Value::Int(3)}, Value::Int(1)}};
    Tree bloated = parseTree("(MaxInt -96 (MinInt (MaxInt x1 x2) (MaxInt (MinInt x1 x2) x0)))", kInts);
    Tree r = localSearch(bloated, cases);
    CHECK(nodeCount(r) < nodeCount(bloated));
    CHECK(accuracyOf(r, cases, {}) == 1.0);
    CHECK(r == testing::bruteLocalSearch(bloated, cases));
}

TEST_CASE("local search agrees with the reference search")
{
    for (const char* name : {"median", "count-odds", "smallest", "compare-string-lengths"}) {
        const auto& b = findBenchmark(name);
        CAPTURE(b.name);
        Dataset d = generateDataset(b, 12, 0, 5);
        Generator gen = makeGenerator(b, {});
        Rng rng(31);
        for (int i = 0; i < 60; ++i) {
            Tree t = gen.tree(b.outputType, 2 + i % 4, Method::Grow, rng);
            CAPTURE(toSExpr(t));
            CHECK(localSearch(t, d.train) == testing::bruteLocalSearch(t, d.train));
        }
    }
}

TEST_CASE("refinement never grows a tree or lowers accuracy")
{
    for (const char* name : {"median", "negative-to-zero", "grade", "last-index-of-zero"}) {
        const auto& b = findBenchmark(name);
        CAPTURE(b.name);
        Dataset d = generateDataset(b, 20, 0, 6);
        Generator gen = makeGenerator(b, {});
        Rng rng(77);
        for (int i = 0; i < 60; ++i) {
            Tree t = gen.tree(b.outputType, 2 + i % 5, i % 2 ? Method::Full : Method::Grow, rng);
            CAPTURE(toSExpr(t));
            Tree r = refine(t, d.train, defaultLaws());
            CHECK(nodeCount(r) <= nodeCount(t));
            CHECK(accuracyOf(r, d.train, {}) >= accuracyOf(t, d.train, {}));
            CHECK(typeOf(r, b.argTypes, b.outputType) == b.outputType);
            CHECK(testing::lambdaViolation(r, 15, 3) == "");
        }
    }
}

TEST_CASE("refining a reference solution keeps it correct")
{
    for (const auto& b : listBenchmarks()) {
        CAPTURE(b.name);
        Dataset d = generateDataset(b, 2);
        Tree r = refine(solutionTree(b), d.train, defaultLaws());
        CHECK(accuracyOf(r, d.train, {}) == 1.0);
    }
}
