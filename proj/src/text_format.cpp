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

#include "mcon/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mcon/error.hpp"

namespace mcon {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
  std::string_view rest;  // text after the first word, trimmed
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (true) {
    ++number;
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : nl - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (!raw.empty()) {
      Line line{number, {}, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
        if (j > i) line.words.push_back(raw.substr(i, j - i));
        i = j;
      }
      line.rest = trim(raw.substr(line.words.front().size()));
      out.push_back(std::move(line));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

int to_int(std::string_view word, int line) {
  int value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(line, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  int line_number() const {
    return done() ? (lines_.empty() ? 1 : lines_.back().number + 1)
                  : lines_[pos_].number;
  }
  const Line& next() {
    if (done()) fail(line_number(), "unexpected end of input");
    return lines_[pos_++];
  }
  // Reads "<key> <int>".
  int keyed_int(std::string_view key) {
    const Line& l = next();
    if (l.words.size() != 2 || l.words[0] != key) {
      fail(l.number, "expected '" + std::string(key) + " <int>'");
    }
    return to_int(l.words[1], l.number);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Matroid& m) {
  std::ostringstream out;
  out << "matroid";
  if (!m.name().empty()) out << ' ' << m.name();
  out << '\n' << "elements " << m.size() << '\n';
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, BasesRep>) {
          out << "type bases\nrank " << rep.rank << '\n';
          for (std::uint64_t b : rep.bases) {
            if (b == 0) continue;
            bool first = true;
            for (int e = 0; e < m.size(); ++e) {
              if ((b & bit(e)) == 0) continue;
              out << (first ? "" : ",") << e;
              first = false;
            }
            out << '\n';
          }
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          out << "type linear\nfield " << rep.field << "\nrows " << rep.rows.size()
              << '\n';
          for (const auto& row : rep.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
              out << (i == 0 ? "" : " ") << row[i];
            }
            out << '\n';
          }
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          out << "type graphic\nvertices " << rep.vertices << '\n';
          for (const auto& [u, v] : rep.edges) out << "edge " << u << ' ' << v << '\n';
        } else {
          out << "type uniform\nrank " << rep.rank << '\n';
        }
      },
      m.representation());
  return out.str();
}

Matroid parse_matroid(std::string_view text) {
  Cursor cur(tokenize(text));
  const Line& head = cur.next();
  if (head.words[0] != "matroid") fail(head.number, "expected 'matroid <name>'");
  const std::string name(head.rest);
  const int n = cur.keyed_int("elements");
  if (n < 0) fail(cur.line_number() - 1, "negative element count");
  if (n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds 64");
  }
  const Line& type_line = cur.next();
  if (type_line.words.size() != 2 || type_line.words[0] != "type") {
    fail(type_line.number, "expected 'type bases|linear|graphic|uniform'");
  }
  const std::string_view type = type_line.words[1];
  Matroid out;
  if (type == "bases") {
    const int r = cur.keyed_int("rank");
    if (r < 0 || r > n) fail(type_line.number + 1, "rank out of range");
    std::vector<std::uint64_t> bases;
    while (!cur.done()) {
      const Line& l = cur.next();
      if (l.words.size() != 1) fail(l.number, "basis lines are comma-separated indices");
      std::uint64_t mask = 0;
      std::string_view w = l.words[0];
      while (true) {
        const auto comma = w.find(',');
        const int e = to_int(w.substr(0, comma), l.number);
        if (e < 0 || e >= n) fail(l.number, "element " + std::to_string(e) + " out of range");
        if ((mask & bit(e)) != 0) fail(l.number, "repeated element in basis");
        mask |= bit(e);
        if (comma == std::string_view::npos) break;
        w = w.substr(comma + 1);
      }
      if (popcount(mask) != r) fail(l.number, "basis size differs from rank");
      bases.push_back(mask);
    }
    if (r == 0) {
      if (!bases.empty()) fail(cur.line_number(), "rank-0 matroid lists no bases");
      bases.push_back(0);
    }
    if (bases.empty()) fail(cur.line_number(), "no bases listed");
    out = Matroid::from_basis_masks(n, std::move(bases), name);
  } else if (type == "linear") {
    const int p = cur.keyed_int("field");
    const int rows = cur.keyed_int("rows");
    if (rows < 0) fail(cur.line_number() - 1, "negative row count");
    std::vector<std::vector<int>> matrix;
    for (int i = 0; i < rows; ++i) {
      const Line& l = cur.next();
      std::vector<int> row;
      for (auto w : l.words) row.push_back(to_int(w, l.number));
      if (static_cast<int>(row.size()) != n) {
        fail(l.number, "row needs " + std::to_string(n) + " entries");
      }
      matrix.push_back(std::move(row));
    }
    out = Matroid::linear(p, n, std::move(matrix), name);
  } else if (type == "graphic") {
    const int v = cur.keyed_int("vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      const Line& l = cur.next();
      if (l.words.size() != 3 || l.words[0] != "edge") fail(l.number, "expected 'edge <u> <v>'");
      edges.emplace_back(to_int(l.words[1], l.number), to_int(l.words[2], l.number));
    }
    out = Matroid::graphic(v, std::move(edges), name);
  } else if (type == "uniform") {
    const int r = cur.keyed_int("rank");
    out = Matroid::uniform_rep(r, n, name);
  } else {
    fail(type_line.number, "unknown type '" + std::string(type) + "'");
  }
  if (!cur.done()) fail(cur.line_number(), "unexpected trailing content");
  return out;
}

Matroid read_matroid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matroid(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_matroid_file(const std::string& path, const Matroid& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << to_text(m);
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace mcon
