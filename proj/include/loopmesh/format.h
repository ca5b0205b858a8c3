// Copyright 2026 The loopmesh Authors
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

#ifndef LOOPMESH_FORMAT_H
#define LOOPMESH_FORMAT_H

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace loopmesh {

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

/// Strict full-string parse; nullopt on any trailing garbage.
std::optional<double> parse_real(std::string_view text);

/// Parses "re+imj" style complex literals: "1", "-2.5j", "0.5-1e-3j", "(1+2j)".
std::optional<std::complex<double>> parse_complex(std::string_view text);

std::string format_complex(std::complex<double> value);

}  // namespace loopmesh

#endif
