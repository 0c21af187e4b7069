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

#ifndef TGP_METRICS_HPP
#define TGP_METRICS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "tgp/value.hpp"

namespace tgp {

/// Absolute tolerance for Float outputs in both accuracy and error.
inline constexpr double kFloatTolerance = 1e-4;

/// Case-error total, or the infinitely bad value given to programs that fail at runtime.
class Fitness {
public:
    static Fitness worst() { return Fitness(true, 0.0); }
    static Fitness error(double total) { return Fitness(false, total); }

    bool isWorst() const noexcept { return worst_; }
    double total() const noexcept { return total_; }
    bool isPerfect() const noexcept { return !worst_ && total_ == 0.0; }
    std::string str() const;

    friend bool operator==(const Fitness&, const Fitness&) = default;
    friend std::partial_ordering operator<=>(const Fitness& a, const Fitness& b)
    {
        if (a.worst_ != b.worst_) return a.worst_ ? std::partial_ordering::greater : std::partial_ordering::less;
        if (a.worst_) return std::partial_ordering::equivalent;
        return a.total_ <=> b.total_;
    }

private:
    Fitness(bool worst, double total) : worst_(worst), total_(total) {}

    bool worst_ = false;
    double total_ = 0.0;
};

enum class MetricKind : std::uint8_t { AbsNumeric, BoolMismatch, Levenshtein, NumericListDistance, StringListDistance };

std::string_view metricName(MetricKind kind);

/// Per-case error between an actual and an expected output.
struct Metric {
    MetricKind kind = MetricKind::AbsNumeric;
    double lengthPenalty = 100.0;

    double operator()(const Value& actual, const Value& expected) const;
};

/// Unit-cost edit distance.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Exact equality except Floats, which match within kFloatTolerance.
bool valuesMatch(const Value& actual, const Value& expected);

}  // namespace tgp

#endif  // TGP_METRICS_HPP
