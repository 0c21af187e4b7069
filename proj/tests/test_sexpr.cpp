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
#include "tgp/evolution.hpp"
#include "tgp/sexpr.hpp"

using namespace tgp;

TEST_CASE("reader handles quotes, comments and nesting")
{
    auto e = readSExpr("(If (EqChar y ')') \"a (b\" y) ; trailing");
    REQUIRE(e.isList);
    REQUIRE(e.list.size() == 4);
    CHECK(e.list[1].list[2].atom == "')'");
    CHECK(e.list[2].atom == "\"a (b\"");
    CHECK(readAllSExprs("x0 # c\n(Not True)").size() == 2);
    CHECK_THROWS_AS(readSExpr("(AddInt 1"), ParseError);
    CHECK_THROWS_AS(readSExpr("(AddInt 1 2))"), ParseError);
}

TEST_CASE("compact types")
{
    Type t = Type::List(Type::Pair(Type::Int(), Type::String()));
    CHECK(compactType(t) == "[{Int,[Char]}]");
    CHECK(parseCompactType("[{Int,[Char]}]") == t);
    CHECK_FALSE(parseCompactType("{Int}").has_value());
}

TEST_CASE("literals")
{
    CHECK(literalString(Value::Int(-3), Type::Int()) == "-3");
    CHECK(literalString(Value::List({}), Type::List(Type::Int())) == "(the [Int] [])");
    CHECK(literalString(Value::Pair(Value::Int(1), Value::Char('a')), Type::Pair(Type::Int(), Type::Char())) == "{1,'a'}");
    auto [v, t] = parseLiteral("\"hi\\n\"");
    CHECK(v == Value::String("hi\n"));
    CHECK(t == Type::String());
    CHECK(parseLiteral("2.5").first == Value::Float(2.5f));
    CHECK(parseLiteral("True").first == Value::Bool(true));
    CHECK(parseLiteral("[1,-2]").first == Value::List({Value::Int(1), Value::Int(-2)}));
    CHECK_THROWS_AS(parseLiteral("foo"), ParseError);
}

TEST_CASE("parse errors")
{
    std::vector<Type> ints{Type::Int()};
    CHECK_THROWS_AS(parseTree("(Nope x0)", ints), ParseError);
    CHECK_THROWS_AS(parseTree("(AddInt x0)", ints), ParseError);
    CHECK_THROWS_AS(parseTree("(AddInt x0 x3)", ints), ParseError);
    CHECK_THROWS_AS(parseTree("y", ints), ParseError);
    CHECK_THROWS(parseTree("(AddInt x0 True)", ints));
}

TEST_CASE("reference solutions round-trip")
{
    for (const auto& b : listBenchmarks()) {
        CAPTURE(b.name);
        Tree t = solutionTree(b);
        std::string text = toSExpr(t);
        Tree back = parseTree(text, b.argTypes);
        CHECK(back == t);
        CHECK(toSExpr(back) == text);
    }
}

TEST_CASE("random trees round-trip")
{
    for (const char* name : {"negative-to-zero", "compare-string-lengths", "last-index-of-zero", "vector-average"}) {
        const auto& b = findBenchmark(name);
        Generator gen = makeGenerator(b, {});
        Rng rng(11);
        for (int i = 0; i < 300; ++i) {
            Tree t = gen.tree(b.outputType, 1 + i % 6, i % 2 ? Method::Full : Method::Grow, rng);
            std::string text = toSExpr(t);
            CAPTURE(text);
            Tree back = parseTree(text, b.argTypes);
            CHECK(back == t);
        }
    }
}
