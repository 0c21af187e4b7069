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

#include "tgp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tgp {

namespace {

double numericDistance(const Value& a, const Value& b)
{
    if (a.kind() == Value::Kind::Int) return std::fabs(static_cast<double>(a.asInt()) - static_cast<double>(b.asInt()));
    if (a.kind() == Value::Kind::Float) {
        double d = std::fabs(static_cast<double>(a.asFloat()) - static_cast<double>(b.asFloat()));
        return d <= kFloatTolerance ? 0.0 : d;
    }
    throw std::invalid_argument("numeric metric applied to " + a.str());
}

std::u32string chars(const Value& v)
{
    std::u32string s;
    for (const auto& c : v.items()) s += c.asChar();
    return s;
}

std::u32string joinedLines(const Value& v)
{
    std::u32string s;
    for (std::size_t i = 0; i < v.items().size(); ++i) {
        if (i) s += U'\n';
        s += chars(v.items()[i]);
    }
    return s;
}

}  // namespace

std::string Fitness::str() const
{
    return worst_ ? "inf" : std::to_string(total_);
}

std::string_view metricName(MetricKind kind)
{
    switch (kind) {
    case MetricKind::AbsNumeric: return "abs-numeric";
    case MetricKind::BoolMismatch: return "bool-mismatch";
    case MetricKind::Levenshtein: return "levenshtein";
    case MetricKind::NumericListDistance: return "numeric-list-distance";
    case MetricKind::StringListDistance: return "string-list-distance";
    }
    return "?";
}

double Metric::operator()(const Value& actual, const Value& expected) const
{
    switch (kind) {
    case MetricKind::AbsNumeric: return numericDistance(actual, expected);
    case MetricKind::BoolMismatch: return actual.asBool() == expected.asBool() ? 0.0 : 1.0;
    case MetricKind::Levenshtein: return static_cast<double>(levenshtein(chars(actual), chars(expected)));
    case MetricKind::NumericListDistance: {
        const auto& a = actual.items();
        const auto& b = expected.items();
        std::size_t common = std::min(a.size(), b.size());
        double total = 0.0;
        for (std::size_t i = 0; i < common; ++i) total += numericDistance(a[i], b[i]);
        std::size_t extra = std::max(a.size(), b.size()) - common;
        return total + lengthPenalty * static_cast<double>(extra);
    }
    case MetricKind::StringListDistance:
        return static_cast<double>(levenshtein(joinedLines(actual), joinedLines(expected)));
    }
    return 0.0;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b)
{
    return levenshtein(decodeUtf8(a), decodeUtf8(b));
}

bool valuesMatch(const Value& actual, const Value& expected)
{
    if (actual.kind() != expected.kind()) return false;
    switch (actual.kind()) {
    case Value::Kind::Float:
        return std::fabs(static_cast<double>(actual.asFloat()) - static_cast<double>(expected.asFloat())) <= kFloatTolerance;
    case Value::Kind::List:
    case Value::Kind::Pair: {
        const auto& a = actual.items();
        const auto& b = expected.items();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!valuesMatch(a[i], b[i])) return false;
        }
        return true;
    }
    default: return actual == expected;
    }
}

}  // namespace tgp
