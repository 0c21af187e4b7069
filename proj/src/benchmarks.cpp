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

#include "tgp/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "tgp/sexpr.hpp"

namespace tgp {

namespace {

using Args = std::vector<Value>;
using nlohmann::json;

std::int32_t randInt(Rng& rng, std::int32_t lo, std::int32_t hi)
{
    return std::uniform_int_distribution<std::int32_t>(lo, hi)(rng);
}

float randFloat(Rng& rng, float lo, float hi)
{
    return std::clamp(std::uniform_real_distribution<float>(lo, hi)(rng), lo, hi);
}

Value intList(const std::vector<std::int32_t>& xs)
{
    std::vector<Value> out;
    for (auto x : xs) out.push_back(Value::Int(x));
    return Value::List(std::move(out));
}

Value floatList(const std::vector<float>& xs)
{
    std::vector<Value> out;
    for (auto x : xs) out.push_back(Value::Float(x));
    return Value::List(std::move(out));
}

Value stringList(const std::vector<std::string>& xs)
{
    std::vector<Value> out;
    for (const auto& x : xs) out.push_back(Value::String(x));
    return Value::List(std::move(out));
}

std::vector<std::int32_t> randIntVec(Rng& rng, int minLen, int maxLen, std::int32_t lo, std::int32_t hi)
{
    std::vector<std::int32_t> xs(static_cast<std::size_t>(randInt(rng, minLen, maxLen)));
    for (auto& x : xs) x = randInt(rng, lo, hi);
    return xs;
}

std::string randString(Rng& rng, int minLen, int maxLen, double spaceProb = 0.0)
{
    std::string s(static_cast<std::size_t>(randInt(rng, minLen, maxLen)), ' ');
    for (auto& c : s) {
        if (spaceProb > 0 && std::bernoulli_distribution(spaceProb)(rng)) continue;
        c = static_cast<char>(randInt(rng, 0x21, 0x7E));
    }
    return s;
}

std::vector<std::int32_t> ints(const Value& list)
{
    std::vector<std::int32_t> out;
    for (const auto& v : list.items()) out.push_back(v.asInt());
    return out;
}

TypeUniverse universe(std::vector<Type> types, const std::vector<Type>& args, const Type& out)
{
    return TypeUniverse::make(std::move(types), args, out);
}

const Type I = Type::Int();
const Type F = Type::Float();
const Type B = Type::Bool();
const Type C = Type::Char();
const Type S = Type::String();
const Type LI = Type::List(Type::Int());
const Type LF = Type::List(Type::Float());
const Type LS = Type::List(Type::String());
const Type PII = Type::Pair(Type::Int(), Type::Int());
const Type LPII = Type::List(Type::Pair(Type::Int(), Type::Int()));

std::string gradeText(char letter)
{
    return std::string("Student has a ") + letter + " grade.";
}

std::vector<BenchmarkSpec> makeBenchmarks()
{
    std::vector<BenchmarkSpec> out;
    auto add = [&](BenchmarkSpec spec) { out.push_back(std::move(spec)); };

    {
        BenchmarkSpec b;
        b.name = "number-io";
        b.argTypes = {I, F};
        b.outputType = F;
        b.universe = universe({I, F}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        b.edgeCases = {{Value::Int(0), Value::Float(0.0f)},
                       {Value::Int(-100), Value::Float(-100.0f)},
                       {Value::Int(100), Value::Float(100.0f)},
                       {Value::Int(-100), Value::Float(100.0f)},
                       {Value::Int(100), Value::Float(-100.0f)}};
        b.randomInput = [](Rng& rng) {
            return Args{Value::Int(randInt(rng, -100, 100)), Value::Float(randFloat(rng, -100.0f, 100.0f))};
        };
        b.oracle = [](std::span<const Value> a) {
            return Value::Float(static_cast<float>(a[0].asInt()) + a[1].asFloat());
        };
        b.solution = "(AddFloat (IntToFloat x0) x1)";
        b.nTrain = 25;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "small-or-large";
        b.argTypes = {I};
        b.outputType = S;
        b.universe = universe({I, B, C, S}, b.argTypes, b.outputType);
        b.metric = {MetricKind::Levenshtein};
        for (std::int32_t n : {-10000, 0, 980, 999, 1000, 1001, 1020, 1980, 1999, 2000, 2001, 2020, 10000})
            b.edgeCases.push_back({Value::Int(n)});
        b.randomInput = [](Rng& rng) { return Args{Value::Int(randInt(rng, -10000, 10000))}; };
        b.oracle = [](std::span<const Value> a) {
            std::int32_t n = a[0].asInt();
            return Value::String(n < 1000 ? "small" : n >= 2000 ? "large" : "");
        };
        b.solution = R"((If (LtInt x0 1000) "small" (If (LtInt x0 2000) "" "large")))";
        b.literals = {{S, {Value::String("small"), Value::String("large")}},
                      {I, {Value::Int(1000), Value::Int(2000)}}};
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "for-loop-index";
        b.argTypes = {I, I, I};
        b.outputType = S;
        b.universe = universe({I, B, C, S, LS, LI}, b.argTypes, b.outputType);
        b.metric = {MetricKind::Levenshtein};
        b.edgeCases = {{Value::Int(0), Value::Int(1), Value::Int(1)},
                       {Value::Int(-10), Value::Int(10), Value::Int(1)},
                       {Value::Int(-10), Value::Int(10), Value::Int(10)},
                       {Value::Int(5), Value::Int(6), Value::Int(10)},
                       {Value::Int(-500), Value::Int(-400), Value::Int(7)},
                       {Value::Int(400), Value::Int(500), Value::Int(3)}};
        b.randomInput = [](Rng& rng) {
            std::int32_t start = randInt(rng, -500, 500);
            std::int32_t end = start + randInt(rng, 1, 100);
            return Args{Value::Int(start), Value::Int(end), Value::Int(randInt(rng, 1, 10))};
        };
        b.oracle = [](std::span<const Value> a) {
            std::string s;
            for (std::int32_t n = a[0].asInt(); n < a[1].asInt(); n += a[2].asInt()) s += std::to_string(n) + "\n";
            return Value::String(s);
        };
        b.solution = "(Unlines (Map (lambda Int (ShowInt y)) (Range x0 (SubInt x1 1) x2)))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "compare-string-lengths";
        b.argTypes = {S, S, S};
        b.outputType = B;
        b.universe = universe({I, B, C, S}, b.argTypes, b.outputType);
        b.metric = {MetricKind::BoolMismatch};
        auto strs = [](std::string x, std::string y, std::string z) {
            return Args{Value::String(x), Value::String(y), Value::String(z)};
        };
        b.edgeCases = {strs("", "", ""), strs("a", "bb", "ccc"), strs("", "a", "bc"), strs("abc", "ab", "a"),
                       strs("a", "a", "a"), strs("", "b", "b"), strs("ab", "cd", "efg"), strs("a", "bcd", "ef")};
        b.randomInput = [](Rng& rng) {
            // Favor strictly increasing lengths so both classes are common.
            if (std::bernoulli_distribution(0.5)(rng)) {
                int l0 = randInt(rng, 0, 47);
                int l1 = randInt(rng, l0 + 1, 48);
                int l2 = randInt(rng, l1 + 1, 49);
                return Args{Value::String(randString(rng, l0, l0)), Value::String(randString(rng, l1, l1)),
                            Value::String(randString(rng, l2, l2))};
            }
            return Args{Value::String(randString(rng, 0, 49)), Value::String(randString(rng, 0, 49)),
                        Value::String(randString(rng, 0, 49))};
        };
        b.oracle = [](std::span<const Value> a) {
            auto n0 = a[0].items().size(), n1 = a[1].items().size(), n2 = a[2].items().size();
            return Value::Bool(n0 < n1 && n1 < n2);
        };
        b.solution = "(And (GtInt (Len x1) (Len x0)) (LtInt (Len x1) (Len x2)))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "count-odds";
        b.argTypes = {LI};
        b.outputType = I;
        b.universe = universe({I, B, LI}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (const auto& xs : std::vector<std::vector<std::int32_t>>{
                 {}, {-10}, {-9}, {0}, {1}, {2}, {-1, 1}, {1, 3, 5}, {2, 4, 6}, {-3, -2, -1, 0, 1, 2, 3}})
            b.edgeCases.push_back({intList(xs)});
        b.randomInput = [](Rng& rng) { return Args{intList(randIntVec(rng, 0, 50, -1000, 1000))}; };
        b.oracle = [](std::span<const Value> a) {
            auto xs = ints(a[0]);
            return Value::Int(static_cast<std::int32_t>(
                std::count_if(xs.begin(), xs.end(), [](std::int32_t x) { return x % 2 != 0; })));
        };
        b.solution = "(Len (Filter (lambda Int (EqInt (ModInt y 2) 1)) x0))";
        b.literals = {{I, {Value::Int(0), Value::Int(1), Value::Int(2)}}};
        b.nTrain = 200;
        b.nTest = 2000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "negative-to-zero";
        b.argTypes = {LI};
        b.outputType = LI;
        b.universe = universe({I, B, LI}, b.argTypes, b.outputType);
        b.metric = {MetricKind::NumericListDistance};
        for (const auto& xs : std::vector<std::vector<std::int32_t>>{
                 {}, {-10}, {-1}, {0}, {1}, {10}, {-10, -1}, {-1, 0}, {0, 1}, {1, 10}, {-5, 5, -5, 5}})
            b.edgeCases.push_back({intList(xs)});
        b.randomInput = [](Rng& rng) { return Args{intList(randIntVec(rng, 0, 50, -1000, 1000))}; };
        b.oracle = [](std::span<const Value> a) {
            auto xs = ints(a[0]);
            for (auto& x : xs) x = std::max(x, 0);
            return intList(xs);
        };
        b.solution = "(Map (lambda Int (MaxInt y 0)) x0)";
        b.literals = {{I, {Value::Int(0)}}, {LI, {intList({})}}};
        b.nTrain = 200;
        b.nTest = 2000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "median";
        b.argTypes = {I, I, I};
        b.outputType = I;
        b.universe = universe({I, B}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (const auto& t : std::vector<std::array<std::int32_t, 3>>{
                 {0, 0, 0}, {-100, -100, -100}, {100, 100, 100}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1},
                 {-5, -10, -1}, {100, -100, 0}, {0, 100, -100}})
            b.edgeCases.push_back({Value::Int(t[0]), Value::Int(t[1]), Value::Int(t[2])});
        b.randomInput = [](Rng& rng) {
            return Args{Value::Int(randInt(rng, -100, 100)), Value::Int(randInt(rng, -100, 100)),
                        Value::Int(randInt(rng, -100, 100))};
        };
        b.oracle = [](std::span<const Value> a) {
            std::array<std::int32_t, 3> v{a[0].asInt(), a[1].asInt(), a[2].asInt()};
            std::sort(v.begin(), v.end());
            return Value::Int(v[1]);
        };
        b.solution = "(MinInt (MaxInt (MinInt x2 x1) x0) (MaxInt x1 x2))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "smallest";
        b.argTypes = {I, I, I, I};
        b.outputType = I;
        b.universe = universe({I, B}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (const auto& t : std::vector<std::array<std::int32_t, 4>>{
                 {0, 0, 0, 0}, {-100, -100, -100, -100}, {100, 100, 100, 100}, {1, 2, 3, 4}, {4, 3, 2, 1},
                 {2, 1, 4, 3}, {100, -100, 100, 100}, {5, 5, 5, -5}})
            b.edgeCases.push_back({Value::Int(t[0]), Value::Int(t[1]), Value::Int(t[2]), Value::Int(t[3])});
        b.randomInput = [](Rng& rng) {
            Args a;
            for (int i = 0; i < 4; ++i) a.push_back(Value::Int(randInt(rng, -100, 100)));
            return a;
        };
        b.oracle = [](std::span<const Value> a) {
            return Value::Int(std::min({a[0].asInt(), a[1].asInt(), a[2].asInt(), a[3].asInt()}));
        };
        b.solution = "(MinInt (MinInt x0 x1) (MinInt x2 x3))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "grade";
        b.argTypes = {I, I, I, I, I};
        b.outputType = S;
        b.universe = universe({I, B, C, S}, b.argTypes, b.outputType);
        b.metric = {MetricKind::Levenshtein};
        auto g = [](std::int32_t a, std::int32_t bb, std::int32_t c, std::int32_t d, std::int32_t s) {
            return Args{Value::Int(a), Value::Int(bb), Value::Int(c), Value::Int(d), Value::Int(s)};
        };
        b.edgeCases = {g(80, 70, 60, 50, 85), g(80, 70, 60, 50, 80), g(80, 70, 60, 50, 79), g(80, 70, 60, 50, 70),
                       g(80, 70, 60, 50, 60), g(80, 70, 60, 50, 50), g(80, 70, 60, 50, 49), g(100, 99, 98, 97, 100),
                       g(4, 3, 2, 1, 0),       g(100, 99, 98, 97, 0)};
        b.randomInput = [](Rng& rng) {
            std::vector<std::int32_t> pool(101);
            for (std::int32_t i = 0; i <= 100; ++i) pool[static_cast<std::size_t>(i)] = i;
            std::vector<std::int32_t> th;
            std::sample(pool.begin(), pool.end(), std::back_inserter(th), 4, rng);
            std::sort(th.rbegin(), th.rend());
            return Args{Value::Int(th[0]), Value::Int(th[1]), Value::Int(th[2]), Value::Int(th[3]),
                        Value::Int(randInt(rng, 0, 100))};
        };
        b.oracle = [](std::span<const Value> a) {
            std::int32_t s = a[4].asInt();
            char letter = s >= a[0].asInt() ? 'A' : s >= a[1].asInt() ? 'B' : s >= a[2].asInt() ? 'C'
                        : s >= a[3].asInt() ? 'D' : 'F';
            return Value::String(gradeText(letter));
        };
        b.solution = "(If (LtInt x4 x3) \"" + gradeText('F') + "\" (If (LtInt x4 x2) \"" + gradeText('D') +
                     "\" (If (LtInt x4 x1) \"" + gradeText('C') + "\" (If (LtInt x4 x0) \"" + gradeText('B') +
                     "\" \"" + gradeText('A') + "\"))))";
        b.literals = {{S, {Value::String("Student has a "), Value::String(" grade.")}},
                      {C, {Value::Char('A'), Value::Char('B'), Value::Char('C'), Value::Char('D'), Value::Char('F')}}};
        b.nTrain = 200;
        b.nTest = 2000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "string-lengths-backwards";
        b.argTypes = {LS};
        b.outputType = S;
        b.universe = universe({I, B, C, S, LS}, b.argTypes, b.outputType);
        b.metric = {MetricKind::Levenshtein};
        for (const auto& xs : std::vector<std::vector<std::string>>{
                 {}, {""}, {"a"}, {"", ""}, {"abc", ""}, {"", "abc"}, {"a", "bb", "ccc"}, {"hello world"}})
            b.edgeCases.push_back({stringList(xs)});
        b.randomInput = [](Rng& rng) {
            std::vector<std::string> xs(static_cast<std::size_t>(randInt(rng, 0, 50)));
            for (auto& s : xs) s = randString(rng, 0, 50, 0.1);
            return Args{stringList(xs)};
        };
        b.oracle = [](std::span<const Value> a) {
            std::string out;
            const auto& xs = a[0].items();
            for (auto it = xs.rbegin(); it != xs.rend(); ++it) out += std::to_string(it->items().size()) + "\n";
            return Value::String(out);
        };
        b.solution = "(Unlines (Map (lambda [Char] (ShowInt (Len y))) (Reverse x0)))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "vector-average";
        b.argTypes = {LF};
        b.outputType = F;
        b.universe = universe({I, F, LF}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (const auto& xs : std::vector<std::vector<float>>{
                 {0.0f}, {-1000.0f}, {1000.0f}, {1000.0f, -1000.0f}, {1.5f, 2.5f}, {-3.25f, 0.0f, 3.25f}})
            b.edgeCases.push_back({floatList(xs)});
        b.randomInput = [](Rng& rng) {
            std::vector<float> xs(static_cast<std::size_t>(randInt(rng, 1, 50)));
            for (auto& x : xs) x = randFloat(rng, -1000.0f, 1000.0f);
            return Args{floatList(xs)};
        };
        b.oracle = [](std::span<const Value> a) {
            float s = 0.0f;
            for (const auto& x : a[0].items()) s += x.asFloat();
            return Value::Float(s / static_cast<float>(a[0].items().size()));
        };
        b.solution = "(DivFloat (SumFloats x0) (IntToFloat (Len x0)))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "vectors-summed";
        b.argTypes = {LI, LI};
        b.outputType = LI;
        b.universe = universe({I, B, LI, PII, LPII}, b.argTypes, b.outputType);
        b.metric = {MetricKind::NumericListDistance};
        for (const auto& [x, y] : std::vector<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>>{
                 {{}, {}}, {{0}, {0}}, {{1}, {-1}}, {{1000}, {1000}}, {{-1000, 5}, {-1000, -5}}, {{1, 2, 3}, {4, 5, 6}}})
            b.edgeCases.push_back({intList(x), intList(y)});
        b.randomInput = [](Rng& rng) {
            int n = randInt(rng, 0, 50);
            return Args{intList(randIntVec(rng, n, n, -1000, 1000)), intList(randIntVec(rng, n, n, -1000, 1000))};
        };
        b.oracle = [](std::span<const Value> a) {
            auto x = ints(a[0]), y = ints(a[1]);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
            return intList(x);
        };
        b.solution = "(Map (lambda {Int,Int} (AddInt (Fst y) (Snd y))) (Zip x0 x1))";
        b.nTrain = 150;
        b.nTest = 1500;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "sum-of-squares";
        b.argTypes = {I};
        b.outputType = I;
        b.universe = universe({I, B, LI}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (std::int32_t n : {1, 2, 3, 4, 5, 100}) b.edgeCases.push_back({Value::Int(n)});
        b.randomInput = [](Rng& rng) { return Args{Value::Int(randInt(rng, 1, 100))}; };
        b.oracle = [](std::span<const Value> a) {
            std::int32_t n = a[0].asInt();
            return Value::Int(n * (n + 1) * (2 * n + 1) / 6);
        };
        b.solution = "(SumInts (Map (lambda Int (MultInt y y)) (Range 1 x0 1)))";
        b.literals = {{I, {Value::Int(0), Value::Int(1)}}};
        b.nTrain = 50;
        b.nTest = 50;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "mirror-image";
        b.argTypes = {LI, LI};
        b.outputType = B;
        b.universe = universe({I, B, LI, PII, LPII}, b.argTypes, b.outputType);
        b.metric = {MetricKind::BoolMismatch};
        for (const auto& [x, y] : std::vector<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>>{
                 {{}, {}}, {{1}, {1}}, {{0}, {1}}, {{1, 2}, {2, 1}}, {{1, 2}, {1, 2}}, {{1, 2, 3}, {3, 2}},
                 {{5, 5}, {5, 5}}, {{1, 2, 1}, {1, 2, 1}}})
            b.edgeCases.push_back({intList(x), intList(y)});
        b.randomInput = [](Rng& rng) {
            auto x = randIntVec(rng, 0, 50, -1000, 1000);
            auto y = x;
            std::reverse(y.begin(), y.end());
            int mode = randInt(rng, 0, 3);
            if (mode == 1 && !y.empty()) y[static_cast<std::size_t>(randInt(rng, 0, static_cast<int>(y.size()) - 1))] += 1;
            if (mode == 2) y = randIntVec(rng, static_cast<int>(x.size()), static_cast<int>(x.size()), -1000, 1000);
            if (mode == 3) y = randIntVec(rng, 0, 50, -1000, 1000);
            return Args{intList(x), intList(y)};
        };
        b.oracle = [](std::span<const Value> a) {
            auto x = ints(a[0]), y = ints(a[1]);
            std::reverse(y.begin(), y.end());
            return Value::Bool(x == y);
        };
        b.solution =
            "(And (EqInt (Len x0) (Len x1)) (EqInt (Len (Filter (lambda {Int,Int} (Not (EqInt (Fst y) (Snd y)))) "
            "(Zip x0 (Reverse x1)))) 0))";
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "last-index-of-zero";
        b.argTypes = {LI};
        b.outputType = I;
        b.universe = universe({I, B, LI, PII, LPII}, b.argTypes, b.outputType);
        b.metric = {MetricKind::AbsNumeric};
        for (const auto& xs : std::vector<std::vector<std::int32_t>>{
                 {0}, {0, 0}, {0, 1}, {1, 0}, {0, 5, 0, 5}, {-1, 0, -1}, {0, 0, 0, 0, 0}, {3, 2, 1, 0}})
            b.edgeCases.push_back({intList(xs)});
        b.randomInput = [](Rng& rng) {
            auto xs = randIntVec(rng, 1, 50, -50, 50);
            int zeros = randInt(rng, 1, std::max(1, static_cast<int>(xs.size()) / 4));
            for (int i = 0; i < zeros; ++i) xs[static_cast<std::size_t>(randInt(rng, 0, static_cast<int>(xs.size()) - 1))] = 0;
            return Args{intList(xs)};
        };
        b.oracle = [](std::span<const Value> a) {
            auto xs = ints(a[0]);
            auto it = std::find(xs.rbegin(), xs.rend(), 0);
            if (it == xs.rend()) throw std::logic_error("last-index-of-zero input without a zero");
            return Value::Int(static_cast<std::int32_t>(xs.rend() - it - 1));
        };
        b.solution =
            "(Fst (Head (Reverse (Filter (lambda {Int,Int} (EqInt 0 (Snd y))) (Zip (Range 0 (Len x0) 1) x0)))))";
        b.literals = {{I, {Value::Int(0)}}};
        b.nTrain = 150;
        b.nTest = 1000;
        add(std::move(b));
    }
    {
        BenchmarkSpec b;
        b.name = "replace-space-with-newline";
        b.argTypes = {S};
        b.outputType = S;
        b.universe = universe({I, B, C, S}, b.argTypes, b.outputType);
        b.metric = {MetricKind::Levenshtein};
        for (const char* s : {"", " ", "a", "a b", "  ", " a ", "hello world", "\n"})
            b.edgeCases.push_back({Value::String(s)});
        b.randomInput = [](Rng& rng) { return Args{Value::String(randString(rng, 0, 20, 0.2))}; };
        b.oracle = [](std::span<const Value> a) {
            std::string s = a[0].toUtf8();
            std::replace(s.begin(), s.end(), ' ', '\n');
            return Value::String(s);
        };
        b.solution = "(Map (lambda Char (If (EqChar y ' ') '\\n' y)) x0)";
        b.literals = {{C, {Value::Char(' '), Value::Char('\n')}}};
        b.nTrain = 100;
        b.nTest = 1000;
        add(std::move(b));
    }
    return out;
}

json toJson(const Value& v)
{
    switch (v.kind()) {
    case Value::Kind::Int: return {{"Int", v.asInt()}};
    case Value::Kind::Float: return {{"Float", static_cast<double>(v.asFloat())}};
    case Value::Kind::Bool: return {{"Bool", v.asBool()}};
    case Value::Kind::Char: return {{"Char", encodeUtf8(v.asChar())}};
    case Value::Kind::List: {
        if (v.isString()) return {{"String", v.toUtf8()}};
        json items = json::array();
        for (const auto& x : v.items()) items.push_back(toJson(x));
        return {{"List", items}};
    }
    case Value::Kind::Pair: return {{"Pair", json::array({toJson(v.first()), toJson(v.second())})}};
    case Value::Kind::Closure: break;
    }
    throw std::invalid_argument("closures cannot be serialized");
}

Value fromJson(const json& j)
{
    if (!j.is_object() || j.size() != 1) throw std::invalid_argument("tagged value expected: " + j.dump());
    const auto& [tag, body] = *j.items().begin();
    if (tag == "Int") return Value::Int(body.get<std::int32_t>());
    if (tag == "Float") return Value::Float(static_cast<float>(body.get<double>()));
    if (tag == "Bool") return Value::Bool(body.get<bool>());
    if (tag == "Char") {
        auto cs = decodeUtf8(body.get<std::string>());
        if (cs.size() != 1) throw std::invalid_argument("Char must hold one character");
        return Value::Char(cs[0]);
    }
    if (tag == "String") return Value::String(body.get<std::string>());
    if (tag == "List") {
        std::vector<Value> items;
        for (const auto& x : body) items.push_back(fromJson(x));
        return Value::List(std::move(items));
    }
    if (tag == "Pair") {
        if (!body.is_array() || body.size() != 2) throw std::invalid_argument("Pair needs two elements");
        return Value::Pair(fromJson(body[0]), fromJson(body[1]));
    }
    throw std::invalid_argument("unknown value tag " + tag);
}

Rng streamRng(std::uint64_t seed, std::uint32_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return Rng(seq);
}

Case makeCase(const BenchmarkSpec& spec, Args args)
{
    Value expected = spec.oracle(args);
    return {std::move(args), std::move(expected)};
}

}  // namespace

const std::vector<BenchmarkSpec>& listBenchmarks()
{
    static const std::vector<BenchmarkSpec> all = makeBenchmarks();
    return all;
}

const BenchmarkSpec& findBenchmark(const std::string& name)
{
    for (const auto& b : listBenchmarks()) {
        if (b.name == name) return b;
    }
    throw std::out_of_range("unknown benchmark " + name);
}

Dataset generateDataset(const BenchmarkSpec& spec, int nTrain, int nTest, std::uint64_t dataSeed)
{
    if (nTrain < 0 || nTest < 0) throw std::invalid_argument("negative dataset size");
    Dataset d;
    for (const auto& e : spec.edgeCases) {
        if (static_cast<int>(d.train.size()) >= nTrain) break;
        d.train.push_back(makeCase(spec, e));
    }
    Rng trainRng = streamRng(dataSeed, 1);
    while (static_cast<int>(d.train.size()) < nTrain) d.train.push_back(makeCase(spec, spec.randomInput(trainRng)));
    Rng testRng = streamRng(dataSeed, 2);
    while (static_cast<int>(d.test.size()) < nTest) d.test.push_back(makeCase(spec, spec.randomInput(testRng)));
    return d;
}

Dataset generateDataset(const BenchmarkSpec& spec, std::uint64_t dataSeed)
{
    return generateDataset(spec, spec.nTrain, spec.nTest, dataSeed);
}

Tree solutionTree(const BenchmarkSpec& spec)
{
    Tree t = parseTree(spec.solution, spec.argTypes);
    typeOf(t, spec.argTypes, spec.outputType);
    return t;
}

CaseScore scoreCases(const Tree& tree, std::span<const Case> cases, const Metric& metric, const EvalBudget& budget)
{
    bool failed = false;
    double total = 0.0;
    std::size_t hits = 0;
    for (const auto& c : cases) {
        EvalResult r = evaluate(tree, c.args, budget);
        if (!r.ok()) {
            failed = true;
            continue;
        }
        if (valuesMatch(r.value(), c.expected)) ++hits;
        if (!failed) total += metric(r.value(), c.expected);
    }
    CaseScore s;
    s.fitness = failed ? Fitness::worst() : Fitness::error(total);
    s.accuracy = cases.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(cases.size());
    return s;
}

Fitness fitnessOf(const Tree& tree, std::span<const Case> cases, const Metric& metric, const EvalBudget& budget)
{
    return scoreCases(tree, cases, metric, budget).fitness;
}

double accuracyOf(const Tree& tree, std::span<const Case> cases, const EvalBudget& budget)
{
    if (cases.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& c : cases) {
        EvalResult r = evaluate(tree, c.args, budget);
        if (r.ok() && valuesMatch(r.value(), c.expected)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(cases.size());
}

std::string valueToJson(const Value& v)
{
    return toJson(v).dump();
}

Value valueFromJson(const std::string& text)
{
    return fromJson(json::parse(text));
}

void writeCasesJsonl(std::ostream& os, std::span<const Case> cases)
{
    for (const auto& c : cases) {
        json args = json::array();
        for (const auto& a : c.args) args.push_back(toJson(a));
        os << json{{"args", args}, {"expected", toJson(c.expected)}}.dump() << '\n';
    }
}

std::vector<Case> readCasesJsonl(std::istream& is)
{
    std::vector<Case> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line);
        Case c;
        for (const auto& a : j.at("args")) c.args.push_back(fromJson(a));
        c.expected = fromJson(j.at("expected"));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace tgp
