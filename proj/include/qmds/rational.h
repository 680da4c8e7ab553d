// Copyright 2026 The qmds Authors
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

#ifndef QMDS_RATIONAL_H
#define QMDS_RATIONAL_H

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace qmds {

using Rational = boost::rational<std::int64_t>;

// Accepts "a/b" or "a". Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "a/b", lowest terms.
std::string format_rational(const Rational &value);

}  // namespace qmds

#endif
