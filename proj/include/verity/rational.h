// Copyright 2026 The Verity Authors.
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

#ifndef VERITY_RATIONAL_H_
#define VERITY_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace verity {

// Exact arbitrary-precision rational used for every numeric constant and
// every numeric value in a model.
using Rational = boost::multiprecision::cpp_rational;

// Parses "[-]digits[.digits]" or "[-]digits/digits". Returns false on any
// other input (including a zero denominator).
bool parse_rational(std::string_view text, Rational* out);

// Shortest exact decimal when the denominator has only factors 2 and 5,
// "n/d" otherwise. parse_rational accepts both forms back.
std::string format_rational(const Rational& value);

}  // namespace verity

#endif  // VERITY_RATIONAL_H_
