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

#include "tgp/metrics.hpp"

using namespace tgp;

TEST_CASE("levenshtein")
{
    CHECK(levenshtein(std::string_view(""), std::string_view("abc")) == 3);
    CHECK(levenshtein(std::string_view("kitten"), std::string_view("sitting")) == 3);
    CHECK(levenshtein(std::string_view("same"), std::string_view("same")) == 0);
    CHECK(levenshtein(std::string_view("flaw"), std::string_view("lawn")) == 2);
    CHECK(levenshtein(std::string_view("\xC3\xA9"), std::string_view("e")) == 1);
}

TEST_CASE("metrics")
{
    Metric abs{MetricKind::AbsNumeric};
    CHECK(abs(Value::Int(3), Value::Int(-4)) == 7.0);
    CHECK(abs(Value::Float(1.0f), Value::Float(1.00001f)) == 0.0);
    CHECK(abs(Value::Float(1.0f), Value::Float(1.5f)) == doctest::Approx(0.5));

    Metric b{MetricKind::BoolMismatch};
    CHECK(b(Value::Bool(true), Value::Bool(false)) == 1.0);
    CHECK(b(Value::Bool(true), Value::Bool(true)) == 0.0);

    Metric lev{MetricKind::Levenshtein};
    CHECK(lev(Value::String("small"), Value::String("smell")) == 1.0);

    Metric lists{MetricKind::NumericListDistance};
    auto l = [](std::vector<std::int32_t> xs) {
        std::vector<Value> v;
        for (auto x : xs) v.push_back(Value::Int(x));
        return Value::List(v);
    };
    CHECK(lists(l({1, 2, 3}), l({1, 5})) == 103.0);
    CHECK(lists(l({}), l({})) == 0.0);

    Metric sl{MetricKind::StringListDistance};
    Value a = Value::List({Value::String("ab"), Value::String("c")});
    Value c = Value::List({Value::String("ab"), Value::String("d")});
    CHECK(sl(a, c) == 1.0);
}

TEST_CASE("metric laws on random values")
{
    std::vector<Value> vs = {Value::String(""), Value::String("abc"), Value::String("xbcz"), Value::String("hello")};
    Metric lev{MetricKind::Levenshtein};
    for (const auto& x : vs) {
        CHECK(lev(x, x) == 0.0);
        for (const auto& y : vs) {
            CHECK(lev(x, y) == lev(y, x));
            CHECK(lev(x, y) >= 0.0);
        }
    }
}

TEST_CASE("value matching")
{
    CHECK(valuesMatch(Value::Float(1.0f), Value::Float(1.00005f)));
    CHECK_FALSE(valuesMatch(Value::Float(1.0f), Value::Float(1.001f)));
    CHECK(valuesMatch(Value::List({Value::Float(2.0f)}), Value::List({Value::Float(2.00001f)})));
    CHECK_FALSE(valuesMatch(Value::List({}), Value::List({Value::Int(1)})));
    CHECK(valuesMatch(Value::String("x"), Value::String("x")));
}
