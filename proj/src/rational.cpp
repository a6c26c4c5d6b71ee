// Copyright 2026 The imsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imsc/rational.hpp"

#include "imsc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace imsc {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw UsageError("cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw UsageError("cannot parse number '" + std::string(whole) + "'");
  }
  if (frac_part.size() > 15) {
    throw UsageError("too many decimal places in '" + std::string(whole) + "'");
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
  std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
  Rational r(ip * scale + fp, scale);
  return negative ? -r : r;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty number");

  if (text.back() == '%') {
    text.remove_suffix(1);
    return parse_decimal(text, whole) / Rational(100);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), whole);
    Rational den = parse_decimal(text.substr(slash + 1), whole);
    if (den == Rational(0)) throw UsageError("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }
  return parse_decimal(text, whole);
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

Threshold::Threshold(std::int64_t num, std::int64_t den) : Threshold(Rational(num, den)) {}

Threshold::Threshold(const Rational& value) : value_(value) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    throw UsageError("threshold " + imsc::to_string(value_) + " outside [0, 1]");
  }
}

Threshold Threshold::parse(std::string_view text) { return Threshold(parse_rational(text)); }

std::string to_string(const Threshold& t) { return to_string(t.value()); }

bool meets_threshold(Count count, const Threshold& thr, Count total) {
  using wide = unsigned __int128;
  return static_cast<wide>(count) * static_cast<wide>(thr.denominator()) >=
         static_cast<wide>(thr.numerator()) * static_cast<wide>(total);
}

Count min_frequent_count(const Threshold& thr, Count total) {
  return static_cast<Count>(std::max<std::int64_t>(ceil(thr.times(total)), 1));
}

}  // namespace imsc
