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

// Brute-force reference implementations used as test oracles. They share no
// code with the library: everything is rebuilt from a raw rank function by
// walking subsets.

#ifndef MCON_TESTS_ORACLES_HPP_
#define MCON_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using RankFn = std::function<int(Mask)>;

inline Mask all_of(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }
inline int size_of(Mask x) { return std::popcount(x); }

// Rank in a cycle matroid: vertices minus components of the chosen edges.
inline int graph_rank(int vertices, const std::vector<std::pair<int, int>>& edges, Mask x) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  int merged = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (((x >> e) & 1U) == 0) continue;
    const int a = find(edges[e].first);
    const int b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++merged;
    }
  }
  return merged;
}

inline RankFn graph_rank_fn(int vertices, std::vector<std::pair<int, int>> edges) {
  return [=](Mask x) { return graph_rank(vertices, edges, x); };
}

// K4 and larger wheels: hub 0, rim vertices 1..k. Edge 2i joins rim
// vertices i (k when i = 0) and i + 1; edge 2i + 1 joins the hub to i + 1.
inline std::vector<std::pair<int, int>> wheel_edges(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i) {
    out.emplace_back(i == 0 ? k : i, i + 1);
    out.emplace_back(0, i + 1);
  }
  return out;
}

inline RankFn bases_rank_fn(std::vector<Mask> bases) {
  return [=](Mask x) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, size_of(b & x));
    return best;
  };
}

inline RankFn uniform_rank_fn(int r) {
  return [=](Mask x) { return std::min(size_of(x), r); };
}

// All r-sets spanning the ground set.
inline std::vector<Mask> bases_of(const RankFn& rk, int n) {
  const int r = rk(all_of(n));
  std::vector<Mask> out;
  for (Mask x = 0; x <= all_of(n); ++x) {
    if (size_of(x) == r && rk(x) == r) out.push_back(x);
  }
  return out;
}

// A minor M \ (E - S - C) / C viewed on the subsets of S.
struct Minor {
  RankFn rk;
  Mask kept;
  Mask contracted = 0;

  int rank(Mask x) const { return rk(x | contracted) - rk(contracted); }
  int lambda(Mask x) const { return rank(x) + rank(kept & ~x) - rank(kept); }
};

inline Minor whole(const RankFn& rk, int n) { return Minor{rk, all_of(n), 0}; }

template <class F>
void for_each_submask(Mask s, F f) {
  Mask x = 0;
  while (true) {
    f(x);
    if (x == s) break;
    x = (x - s) & s;
  }
}

inline bool has_separation_below(const Minor& m, int level) {
  const int n = size_of(m.kept);
  bool found = false;
  for_each_submask(m.kept, [&](Mask x) {
    if (found) return;
    const int side = std::min(size_of(x), n - size_of(x));
    const int lam = m.lambda(x);
    for (int j = 1; j < level; ++j) {
      if (side >= j && lam <= j - 1) found = true;
    }
  });
  return found;
}

inline bool k_connected(const Minor& m, int level) { return !has_separation_below(m, level); }

inline bool minimally_k_connected(const RankFn& rk, int n, int level) {
  if (!k_connected(whole(rk, n), level)) return false;
  for (int e = 0; e < n; ++e) {
    if (k_connected(Minor{rk, all_of(n) & ~(Mask{1} << e)}, level)) return false;
  }
  return true;
}

// Any proper restriction with at least min_size elements that is k-connected.
inline bool proper_connected_restriction(const RankFn& rk, int n, int level, int min_size) {
  bool found = false;
  for_each_submask(all_of(n), [&](Mask s) {
    if (found || s == all_of(n) || size_of(s) < min_size) return;
    if (k_connected(Minor{rk, s}, level)) found = true;
  });
  return found;
}

inline bool super_minimally_k_connected(const RankFn& rk, int n, int k) {
  return k_connected(whole(rk, n), k) && !proper_connected_restriction(rk, n, k, 2 * k - 2);
}

inline bool simple(const RankFn& rk, int n) {
  for (int a = 0; a < n; ++a) {
    if (rk(Mask{1} << a) == 0) return false;
    for (int b = a + 1; b < n; ++b) {
      if (rk((Mask{1} << a) | (Mask{1} << b)) < 2) return false;
    }
  }
  return true;
}

inline bool brittle(const RankFn& rk, int n) {
  bool found = false;
  for_each_submask(all_of(n), [&](Mask s) {
    if (!found && size_of(s) >= 4 && k_connected(Minor{rk, s}, 3)) found = true;
  });
  return simple(rk, n) && !found;
}

inline bool is_circuit(const RankFn& rk, Mask x) {
  if (x == 0 || rk(x) != size_of(x) - 1) return false;
  for (Mask y = x; y != 0; y &= y - 1) {
    if (rk(x & ~(y & (~y + 1))) != size_of(x) - 1) return false;
  }
  return true;
}

inline RankFn dual_rank_fn(const RankFn& rk, int n) {
  return [=](Mask x) { return size_of(x) + rk(all_of(n) & ~x) - rk(all_of(n)); };
}

inline std::vector<Mask> circuits_of_size(const RankFn& rk, int n, int size) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= all_of(n); ++x) {
    if (size_of(x) == size && is_circuit(rk, x)) out.push_back(x);
  }
  return out;
}

inline int elements_in_triads(const RankFn& rk, int n) {
  Mask covered = 0;
  for (Mask t : circuits_of_size(dual_rank_fn(rk, n), n, 3)) covered |= t;
  return size_of(covered);
}

inline Mask essential(const RankFn& rk, int n) {
  Mask out = 0;
  for (int e = 0; e < n; ++e) {
    const Mask rest = all_of(n) & ~(Mask{1} << e);
    const bool del = k_connected(Minor{rk, rest, 0}, 3);
    const bool con = k_connected(Minor{rk, rest, Mask{1} << e}, 3);
    if (!del && !con) out |= Mask{1} << e;
  }
  return out;
}

inline int closed_sets(const RankFn& rk, int n) {
  int count = 0;
  for (Mask x = 0; x <= all_of(n); ++x) {
    bool closed = true;
    for (int e = 0; e < n && closed; ++e) {
      if (((x >> e) & 1U) == 0 && rk(x | (Mask{1} << e)) == rk(x)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace oracle

#endif  // MCON_TESTS_ORACLES_HPP_
