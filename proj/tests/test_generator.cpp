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

#include <set>

#include "support/oracles.hpp"
#include "tgp/benchmarks.hpp"
#include "tgp/evolution.hpp"
#include "tgp/sexpr.hpp"

using namespace tgp;

namespace {

const Type I = Type::Int();
const Type B = Type::Bool();

Generator generatorFor(const TypeUniverse& u, GenConfig cfg = {})
{
    return Generator(std::make_shared<const GrammarInstance>(monomorphize(catalog(), u)), cfg);
}

}  // namespace

TEST_CASE("generated trees are well typed and respect the lambda rules")
{
    for (const auto& b : listBenchmarks()) {
        CAPTURE(b.name);
        Generator gen = makeGenerator(b, {});
        Rng rng(5);
        for (int i = 0; i < 150; ++i) {
            int d = 1 + i % 8;
            Method m = i % 2 ? Method::Full : Method::Grow;
            Tree t = gen.tree(b.outputType, d, m, rng);
            CAPTURE(toSExpr(t));
            CHECK(typeOf(t, b.argTypes, b.outputType) == b.outputType);
            CHECK(mainDepth(t) <= d);
            CHECK(testing::lambdaViolation(t, gen.config().maxDepth, gen.config().maxLambdaDepth) == "");
        }
    }
}

TEST_CASE("full trees reach the requested depth when the full table allows it")
{
    const auto& b = findBenchmark("median");
    Generator gen = makeGenerator(b, {});
    Rng rng(9);
    for (int d = 1; d <= 6; ++d) {
        REQUIRE(gen.fullTable().row(d).count(I));
        for (int i = 0; i < 20; ++i) CHECK(mainDepth(gen.tree(I, d, Method::Full, rng)) == d);
    }
}

TEST_CASE("generation is deterministic for a fixed seed")
{
    const auto& b = findBenchmark("vectors-summed");
    Generator gen = makeGenerator(b, {});
    Rng r1(123), r2(123);
    auto p1 = gen.initialPopulation(60, r1);
    auto p2 = gen.initialPopulation(60, r2);
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i] == p2[i]);
}

TEST_CASE("ramp schedule")
{
    GenConfig cfg;
    cfg.rampMin = 2;
    cfg.rampMax = 4;
    auto gen = generatorFor(TypeUniverse::make({I, B}, {I}, I), cfg);
    auto slots = gen.rampSchedule(6);
    REQUIRE(slots.size() == 6);
    std::set<int> depths;
    int full = 0;
    for (const auto& s : slots) {
        depths.insert(s.depth);
        full += s.method == Method::Full;
    }
    CHECK(depths == std::set<int>{2, 3, 4});
    CHECK(full == 3);
    Rng rng(1);
    CHECK_THROWS(gen.initialPopulation(1, rng));
}

TEST_CASE("constants stay within the configured ranges")
{
    GenConfig cfg;
    cfg.intMin = -7;
    cfg.intMax = 9;
    cfg.floatMin = 0.5f;
    cfg.floatMax = 2.0f;
    cfg.listMaxLength = 4;
    auto u = TypeUniverse::make({I, B, Type::Float(), Type::Char(), Type::List(I)});
    auto gen = generatorFor(u, cfg);
    Rng rng(3);
    std::set<std::int32_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto v = gen.constant(I, rng).asInt();
        CHECK(v >= -7);
        CHECK(v <= 9);
        seen.insert(v);
        float f = gen.constant(Type::Float(), rng).asFloat();
        CHECK(f >= 0.5f);
        CHECK(f <= 2.0f);
        char32_t c = gen.constant(Type::Char(), rng).asChar();
        CHECK(c >= 32);
        CHECK(c <= 126);
        CHECK(gen.constant(Type::List(I), rng).items().size() <= 4);
    }
    CHECK(seen.size() == 17);
    CHECK_THROWS_AS(gen.constant(Type::Fun(I, I), rng), UnsupportedTypeError);
}

TEST_CASE("problem literals are offered")
{
    GenConfig cfg;
    cfg.literals[Type::String()] = {Value::String("small")};
    cfg.literalProbability = 1.0;
    auto gen = generatorFor(TypeUniverse::make({I, B, Type::String(), Type::Char()}), cfg);
    Rng rng(1);
    for (int i = 0; i < 10; ++i) CHECK(gen.constant(Type::String(), rng) == Value::String("small"));
    cfg.literalProbability = 1.5;
    CHECK_THROWS(cfg.validate());
}

TEST_CASE("unproducible requests are reported")
{
    auto gen = generatorFor(TypeUniverse::make({I, B}, {I}, I));
    Rng rng(1);
    CHECK_THROWS_AS(gen.lambda(Type::Fun(I, I), rng), UnproducibleError);
    CHECK_THROWS_AS(gen.lambda(I, rng), UnproducibleError);
    GenConfig bad;
    bad.maxLambdaDepth = 0;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("lambdas use their parameter")
{
    const auto& b = findBenchmark("count-odds");
    Generator gen = makeGenerator(b, {});
    Rng rng(17);
    Type fun = Type::Fun(I, B);
    for (int i = 0; i < 200; ++i) {
        Tree l = gen.lambda(fun, rng);
        CHECK(l.kind() == NodeKind::Lambda);
        CHECK(typeOf(l) == fun);
        CHECK(containsFreeParam(l.children()[0]));
        CHECK_FALSE(containsArg(l));
        CHECK(maxLambdaBodyDepth(l) <= 3);
    }
}
