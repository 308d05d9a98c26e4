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

// Exact rational arithmetic used for every approximation guarantee.

#ifndef MKVC_RATIO_H_
#define MKVC_RATIO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mkvc {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// Lower bound on 1 - 1/e used as the greedy guarantee (1 - 1/e = 0.63212055...).
inline Ratio GreedyRatioLowerBound() { return Ratio(632120, 1000000); }

BigInt Floor(const Ratio& q);
BigInt Ceil(const Ratio& q);

// Largest multiple of 2^-bits that is <= q.
Ratio FloorToGrid(const Ratio& q, unsigned bits);
// Smallest multiple of 2^-bits that is >= q.
Ratio CeilToGrid(const Ratio& q, unsigned bits);

// Upper bound on sqrt(x) for x >= 0, within 2^-bits of the true value.
Ratio SqrtUpper(const Ratio& x, unsigned bits = 256);

// Decimal rendering truncated toward zero, e.g. ToDecimal(2/3, 4) == "0.6666".
std::string ToDecimal(const Ratio& q, int digits = 6);

double ToDouble(const Ratio& q);

// Accepts "p", "p/q" or a plain decimal "12.375". Throws std::invalid_argument.
Ratio ParseRatio(std::string_view text);

// Renders "p" for integers and "p/q" otherwise.
std::string ToFractionString(const Ratio& q);

}  // namespace mkvc

#endif  // MKVC_RATIO_H_
