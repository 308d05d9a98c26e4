// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mkvc/ratio.h"

#include <cctype>
#include <stdexcept>

namespace mkvc {

BigInt Floor(const Ratio& q) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

BigInt Ceil(const Ratio& q) { return -Floor(-q); }

Ratio FloorToGrid(const Ratio& q, unsigned bits) {
  const BigInt scale = BigInt(1) << bits;
  return Ratio(Floor(q * scale), scale);
}

Ratio CeilToGrid(const Ratio& q, unsigned bits) {
  const BigInt scale = BigInt(1) << bits;
  return Ratio(Ceil(q * scale), scale);
}

Ratio SqrtUpper(const Ratio& x, unsigned bits) {
  if (x < 0) throw std::invalid_argument("square root of a negative value");
  // ceil(x 4^bits) <= (r+1)^2 for r = isqrt(ceil(x 4^bits)), so (r+1) 2^-bits
  // bounds sqrt(x) from above.
  const BigInt scaled = Ceil(x * (BigInt(1) << (2 * bits)));
  BigInt root = boost::multiprecision::sqrt(scaled);
  if (root * root != scaled) root += 1;
  return Ratio(root, BigInt(1) << bits);
}

std::string ToDecimal(const Ratio& q, int digits) {
  const bool negative = q < 0;
  const Ratio magnitude = negative ? Ratio(-q) : q;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt scaled = Floor(magnitude * scale);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    out += '.';
    out += std::string(static_cast<size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

double ToDouble(const Ratio& q) { return q.convert_to<double>(); }

Ratio ParseRatio(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Ratio value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator");
    value = Ratio(BigInt(std::string(num)), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    value = Ratio(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(text)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    value = Ratio(BigInt(std::string(text)));
  }
  return negative ? Ratio(-value) : value;
}

std::string ToFractionString(const Ratio& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace mkvc
