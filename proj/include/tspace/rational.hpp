// Copyright 2026 The tspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSPACE_RATIONAL_HPP_
#define TSPACE_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tspace {

// Arbitrary-precision exact rational. Always normalized (lowest terms,
// positive denominator).
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; integers are written with denominator 1.
std::string to_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws Error(ParseError) on anything
// else, including a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace tspace

#endif  // TSPACE_RATIONAL_HPP_
