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

#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "mcon/constructions.hpp"
#include "mcon/error.hpp"
#include "mcon/text_format.hpp"

using namespace mcon;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_matroid(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every representation round-trips") {
  const std::vector<Matroid> ms = {
      uniform(2, 4),
      wheel(4).matroid,
      whirl(3).matroid,
      Matroid::linear(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}, "ternary"),
      uniform(0, 3),
      Matroid::from_basis_masks(3, {0}),
      Matroid(),
  };
  for (const auto& m : ms) {
    const Matroid back = parse_matroid(to_text(m));
    CHECK(back == m);
    CHECK(back.name() == m.name());
    CHECK(to_text(back) == to_text(m));
  }
}

TEST_CASE("rank-0 bases files list no basis lines") {
  const std::string text = to_text(Matroid::from_basis_masks(2, {0}, "loops"));
  CHECK(text == "matroid loops\nelements 2\ntype bases\nrank 0\n");
  CHECK(parse_matroid(text).rank() == 0);
}

TEST_CASE("comments and blank lines are ignored") {
  const Matroid m = parse_matroid(
      "# a triangle\n\nmatroid tri\nelements 3   # three\ntype bases\nrank 2\n0,1\n0,2\n1,2\n");
  CHECK(m == uniform(2, 3));
  CHECK(m.name() == "tri");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of("matroid x\nelements 2\ntype bases\nrank 1\n0\n2\n").starts_with("line 6"));
  CHECK(error_of("matroid x\nelements two\n").starts_with("line 2"));
  CHECK(error_of("matroid x\nelements 2\ntype weird\n").starts_with("line 3"));
  CHECK(error_of("matroid x\nelements 4\ntype bases\nrank 2\n0,1\n2,3\n") != "");
  CHECK(error_of("matroid x\nelements 2\ntype bases\nrank 1\n0,0\n") != "");
  CHECK(error_of("matroid x\nelements 3\ntype graphic\nvertices 2\nedge 0 1\n") != "");
  CHECK(error_of("matroid x\nelements 1\ntype graphic\nvertices 2\nedge 0 1\nedge 0 1\n") !=
        "");
  CHECK(error_of("matroid x\nelements 2\ntype uniform\nrank 3\n") != "");
  CHECK(error_of("") != "");
  CHECK_THROWS_AS(parse_matroid("matroid x\nelements 65\ntype uniform\nrank 1\n"),
                  CapacityError);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "mcon_text_format_test.m";
  write_matroid_file(path.string(), wheel(3).matroid);
  CHECK(read_matroid_file(path.string()) == wheel(3).matroid);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_matroid_file(path.string()), InputError);
}
