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

// Line-oriented matroid files:
//
//   matroid <name>
//   elements <n>
//   type bases|linear|graphic|uniform
//   ...representation lines...
//
// '#' starts a comment. A rank-0 bases file lists no basis lines.

#ifndef MCON_TEXT_FORMAT_HPP_
#define MCON_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "mcon/matroid.hpp"

namespace mcon {

std::string to_text(const Matroid& m);
// Throws InputError with a line number on malformed input.
Matroid parse_matroid(std::string_view text);

Matroid read_matroid_file(const std::string& path);
void write_matroid_file(const std::string& path, const Matroid& m);

}  // namespace mcon

#endif  // MCON_TEXT_FORMAT_HPP_
