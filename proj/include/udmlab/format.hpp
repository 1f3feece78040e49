// Copyright 2026 The udmlab Authors
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

#pragma once

#include <string>

namespace udmlab {

/// Shortest decimal form of x with at most 15 significant digits.
std::string format_number(double x);

/// x rounded to 15 significant digits, so that serializers emitting the
/// shortest round-trip representation print at most 15 digits.
double round_sig15(double x);

}  // namespace udmlab
