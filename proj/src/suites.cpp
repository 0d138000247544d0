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

#include "mcon/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "internal.hpp"
#include "json.hpp"
#include "mcon/canonical.hpp"
#include "mcon/constructions.hpp"
#include "mcon/coverage.hpp"
#include "mcon/enumeration.hpp"
#include "mcon/error.hpp"
#include "mcon/parallel.hpp"

namespace mcon {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Tally {
  long long checked = 0;
  std::vector<Counterexample> fails;

  void fail(const std::string& key, std::string detail) {
    fails.push_back({key, std::move(detail)});
  }
  void absorb(Tally&& other) {
    checked += other.checked;
    for (auto& f : other.fails) fails.push_back(std::move(f));
  }
};

// Applies f to each entry in parallel and merges the tallies in entry order.
Tally over_entries(const std::vector<const CorpusEntry*>& entries, int threads,
                   const std::function<void(const CorpusEntry&, Tally&)>& f) {
  std::vector<Tally> slots(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) { f(*entries[i], slots[i]); });
  Tally out;
  for (auto& s : slots) out.absorb(std::move(s));
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) : start_(Clock::now()) {
    report_.suite = std::move(name);
  }
  void part(const std::string& name, Tally&& t) {
    report_.parts.emplace_back(name, t.checked);
    report_.checked += t.checked;
    for (auto& f : t.fails) report_.fails.push_back(std::move(f));
  }
  // Listed in parts without adding to the instance count.
  void info(const std::string& name, long long count) {
    report_.parts.emplace_back(name, count);
  }
  void scope(std::string s) { report_.scope = std::move(s); }
  SuiteReport finish() {
    report_.elapsed_s = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  Clock::time_point start_;
};

ElementSet one(int n, int e) { return ElementSet(n, bit(e)); }

std::string uname(int r, int n) {
  return "U_{" + std::to_string(r) + "," + std::to_string(n) + "}";
}

std::string hex_bits(const std::vector<std::uint8_t>& bits) {
  CanonicalForm tmp;
  tmp.bits = bits;
  const std::string s = tmp.to_string();
  return s.substr(s.rfind('-') + 1);
}

std::string corpus_scope(const SuiteContext& ctx) {
  std::string s = "census n<=" + std::to_string(ctx.n_max);
  if (!ctx.constructed.empty()) {
    s += " plus wheels and whirls up to k=" + std::to_string(ctx.k_max);
  }
  return s;
}

bool three_connected(std::span<const std::uint8_t> table, std::uint64_t kept,
                     std::uint64_t contracted = 0) {
  return detail::minor_is_k_connected(table, kept, contracted, 3);
}

// Deletes x then contracts y, both given in the labels of m.
Matroid delete_contract(const Matroid& m, int x, int y) {
  const Matroid d = delete_elements(m, one(m.size(), x));
  return contract_elements(d, one(d.size(), y > x ? y - 1 : y));
}

Matroid co_of_deletion(const Matroid& m, int e) {
  return cosimplify(delete_elements(m, one(m.size(), e))).matroid;
}

Matroid si_of_contraction(const Matroid& m, int e) {
  return simplify(contract_elements(m, one(m.size(), e))).matroid;
}

bool is_coloop(const Matroid& m, int e) {
  return m.rank_of(full_mask(m.size()) & ~bit(e)) < m.rank();
}

// ---- census-level set comparisons ------------------------------------------

void compare_class_sets(const std::set<CanonicalForm>& found,
                        const std::map<CanonicalForm, std::string>& expected,
                        const std::string& what, Tally& t) {
  for (const auto& cf : found) {
    if (!expected.count(cf)) t.fail(cf.to_string(), what + " but not an expected class");
  }
  for (const auto& [cf, name] : expected) {
    if (!found.count(cf)) t.fail(cf.to_string(), "expected class " + name + " not found");
  }
}

}  // namespace

// ---- reports and keys ---------------------------------------------------------

std::string report_to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["checked"] = report.checked;
  Json parts = Json::object();
  for (const auto& [name, count] : report.parts) parts[name] = count;
  j["parts"] = parts;
  Json fails = Json::array();
  for (const auto& f : report.fails) {
    Json item;
    item["cf"] = f.key;
    item["detail"] = f.detail;
    fails.push_back(item);
  }
  j["fails"] = fails;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", report.elapsed_s);
  j["elapsed_s"] = Json::parse(buf);
  j["verdict"] = report.passed() ? "pass" : "fail";
  if (!report.scope.empty()) j["scope"] = report.scope;
  return j.dump();
}

std::string matroid_key(const Matroid& m) {
  if (m.size() <= kMaxCanonicalSize) return canonical_form(m).to_string();
  std::vector<std::uint8_t> bits;
  detail::for_each_combination(m.size(), m.rank(), [&](std::uint64_t x) {
    bits.push_back(m.rank_of(x) == m.rank() ? 1 : 0);
  });
  return "lab1:n" + std::to_string(m.size()) + "-r" + std::to_string(m.rank()) + "-" +
         hex_bits(bits);
}

Matroid matroid_from_key(const std::string& key) {
  if (key.starts_with("cf1:")) return CanonicalForm::parse(key).decode();
  if (!key.starts_with("lab1:n")) throw InputError("unknown matroid key '" + key + "'");
  const auto r_pos = key.find("-r");
  const auto h_pos = key.find('-', r_pos + 2);
  if (r_pos == std::string::npos || h_pos == std::string::npos) {
    throw InputError("malformed labeled key");
  }
  int n = 0;
  int r = 0;
  try {
    n = std::stoi(key.substr(6, r_pos - 6));
    r = std::stoi(key.substr(r_pos + 2, h_pos - r_pos - 2));
  } catch (const std::exception&) {
    throw InputError("malformed labeled key");
  }
  if (n < 0 || r < 0 || r > n) throw InputError("malformed labeled key");
  if (n > kMaxSearchSize) throw CapacityError("labeled keys are limited to 24 elements");
  std::vector<std::uint64_t> subsets;
  detail::for_each_combination(n, r, [&](std::uint64_t x) { subsets.push_back(x); });
  const std::string hex = key.substr(h_pos + 1);
  if (hex.size() != (subsets.size() + 3) / 4) throw InputError("labeled key has wrong length");
  std::vector<std::uint64_t> bases;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const char c = hex[i / 4];
    const int v = c >= 'a' ? c - 'a' + 10 : c - '0';
    if (v < 0 || v > 15) throw InputError("labeled key has a non-hex character");
    if ((v >> (3 - i % 4)) & 1) bases.push_back(subsets[i]);
  }
  return Matroid::from_basis_masks(n, std::move(bases));
}

// ---- context ----------------------------------------------------------------

std::vector<const CorpusEntry*> SuiteContext::corpus() const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : census_entries) out.push_back(&e);
  for (const auto& e : constructed) out.push_back(&e);
  return out;
}

SuiteContext make_context(int n_max, int k_max, int threads,
                          std::optional<std::vector<CensusRecord>> census_records) {
  if (n_max < 1) throw InputError("--nmax must be at least 1");
  if (n_max > kMaxEnumerationSize) throw CapacityError("--nmax is limited to 8");
  if (k_max < 3) throw InputError("--kmax must be at least 3");
  if (2 * k_max > kMaxSearchSize) throw CapacityError("--kmax is limited to 12");
  SuiteContext ctx;
  ctx.n_max = n_max;
  ctx.k_max = k_max;
  ctx.threads = std::max(threads, 1);
  if (census_records) {
    for (const auto& rec : *census_records) {
      if (rec.n <= n_max) ctx.census.push_back(rec);
    }
  } else {
    ctx.census = census(n_max, ctx.threads);
  }
  ctx.census_entries.resize(ctx.census.size());
  parallel_for(ctx.census.size(), ctx.threads, [&](std::size_t i) {
    const auto& rec = ctx.census[i];
    ctx.census_entries[i] = CorpusEntry{rec.cf.decode(), rec.cf.to_string(), rec.flags, false};
  });
  std::vector<Matroid> built;
  for (int k = std::max(3, n_max / 2 + 1); k <= k_max; ++k) built.push_back(wheel(k).matroid);
  for (int k = std::max(3, n_max / 2 + 1); k <= k_max; ++k) built.push_back(whirl(k).matroid);
  ctx.constructed.resize(built.size());
  parallel_for(built.size(), ctx.threads, [&](std::size_t i) {
    ctx.constructed[i] =
        CorpusEntry{built[i], matroid_key(built[i]), compute_flags(built[i]), true};
  });
  return ctx;
}

// ---- suites -------------------------------------------------------------------

SuiteReport suite_table1(const SuiteContext& ctx) {
  ReportBuilder rb("table1");
  if (ctx.n_max < 4) throw InputError("the small-class table needs --nmax >= 4");
  const std::vector<std::pair<int, int>> listed = {{0, 1}, {1, 1}, {1, 2},
                                                   {1, 3}, {2, 3}, {2, 4}};
  std::map<CanonicalForm, std::string> expected;
  Tally direct;
  for (const auto& [r, n] : listed) {
    const Matroid u = uniform(r, n);
    expected.emplace(canonical_form(u), uname(r, n));
    if (!is_k_connected(u, 3)) {
      direct.fail(canonical_form(u).to_string(), uname(r, n) + " is not 3-connected");
    }
  }
  Tally census_part;
  std::set<CanonicalForm> found;
  std::map<int, long long> per_size;
  for (const auto& rec : ctx.census) {
    if (rec.n <= 4 && rec.flags.is_3connected) {
      found.insert(rec.cf);
      ++per_size[rec.n];
      ++census_part.checked;
    }
  }
  compare_class_sets(found, expected, "3-connected on at most 4 elements", census_part);
  census_part.absorb(std::move(direct));
  rb.part("census_3connected_n<=4", std::move(census_part));
  for (int n = 1; n <= 4; ++n) rb.info("size_" + std::to_string(n), per_size[n]);
  return rb.finish();
}

SuiteReport suite_prop11(const SuiteContext& ctx) {
  ReportBuilder rb("prop11");
  std::vector<const CorpusEntry*> entries;
  for (const auto& e : ctx.census_entries) entries.push_back(&e);
  std::vector<char> sm2c(entries.size(), 0);
  parallel_for(entries.size(), ctx.threads, [&](std::size_t i) {
    sm2c[i] = is_super_minimally_k_connected(entries[i]->matroid, 2) ? 1 : 0;
  });
  Tally bound;
  std::set<CanonicalForm> found;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!sm2c[i]) continue;
    const Matroid& m = entries[i]->matroid;
    found.insert(ctx.census[i].cf);
    ++bound.checked;
    if (m.size() > m.rank() + 1) {
      bound.fail(entries[i]->key, "sm2c with |E| = " + std::to_string(m.size()) +
                                      " > r + 1 = " + std::to_string(m.rank() + 1));
    }
  }
  std::map<CanonicalForm, std::string> expected;
  expected.emplace(canonical_form(uniform(1, 1)), uname(1, 1));
  for (int r = 0; r + 1 <= ctx.n_max; ++r) {
    expected.emplace(canonical_form(uniform(r, r + 1)), uname(r, r + 1));
  }
  Tally classes;
  classes.checked = static_cast<long long>(entries.size());
  compare_class_sets(found, expected, "super-minimally 2-connected", classes);
  rb.part("census_scanned", std::move(classes));
  rb.part("sm2c_size_bound", std::move(bound));
  rb.scope("census n<=" + std::to_string(ctx.n_max));
  return rb.finish();
}

SuiteReport suite_density(const SuiteContext& ctx) {
  ReportBuilder rb("density");
  Tally bound;
  std::set<CanonicalForm> equality;
  for (const auto& e : ctx.census_entries) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_sm_3connected || m.size() < 4) continue;
    ++bound.checked;
    if (m.size() > 2 * m.rank()) {
      bound.fail(e.key, "sm3c with |E| = " + std::to_string(m.size()) + " > 2r = " +
                            std::to_string(2 * m.rank()));
    }
    if (m.size() == 2 * m.rank()) equality.insert(canonical_form(m));
  }
  std::map<CanonicalForm, std::string> expected;
  expected.emplace(canonical_form(uniform(2, 4)), uname(2, 4));
  for (int k = 3; 2 * k <= ctx.n_max; ++k) {
    expected.emplace(canonical_form(wheel(k).matroid), "wheel(" + std::to_string(k) + ")");
    expected.emplace(canonical_form(whirl(k).matroid), "whirl(" + std::to_string(k) + ")");
  }
  Tally eq;
  eq.checked = static_cast<long long>(equality.size());
  compare_class_sets(equality, expected, "sm3c with |E| = 2r", eq);

  // Wheels and whirls are checked directly, independent of the census flags.
  std::vector<std::pair<std::string, Matroid>> family;
  for (int k = 3; k <= ctx.k_max; ++k) {
    family.emplace_back("wheel(" + std::to_string(k) + ")", wheel(k).matroid);
    family.emplace_back("whirl(" + std::to_string(k) + ")", whirl(k).matroid);
  }
  std::vector<Tally> slots(family.size());
  parallel_for(family.size(), ctx.threads, [&](std::size_t i) {
    const Matroid& m = family[i].second;
    ++slots[i].checked;
    if (!is_super_minimally_k_connected(m, 3)) {
      slots[i].fail(matroid_key(m), family[i].first + " is not sm3c");
    }
    if (m.size() != 2 * m.rank()) {
      slots[i].fail(matroid_key(m), family[i].first + " has |E| != 2r");
    }
  });
  Tally constructed;
  for (auto& s : slots) constructed.absorb(std::move(s));

  // Minimally 3-connected classes with exactly 2r elements at ranks 3 and 4
  // are wheels or whirls.
  Tally small_rank;
  for (const auto& e : ctx.census_entries) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_min_3connected || m.size() != 2 * m.rank()) continue;
    if (m.rank() < 3 || m.rank() > 4) continue;
    ++small_rank.checked;
    if (!are_isomorphic(m, wheel(m.rank()).matroid) &&
        !are_isomorphic(m, whirl(m.rank()).matroid)) {
      small_rank.fail(e.key, "minimally 3-connected with |E| = 2r, rank " +
                                 std::to_string(m.rank()) + ", but not a wheel or whirl");
    }
  }
  rb.part("sm3c_size_bound", std::move(bound));
  rb.part("equality_classes", std::move(eq));
  rb.part("wheels_whirls_sm3c", std::move(constructed));
  rb.part("min3c_2r_rank3_4", std::move(small_rank));
  rb.scope(corpus_scope(ctx) +
           "; the rank<=6 density bound is confirmed on this corpus only");
  return rb.finish();
}

SuiteReport suite_lemma31(const SuiteContext& ctx) {
  ReportBuilder rb("lemma31");
  Tally t = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_sm_3connected || m.size() < 5) return;
    for (int x = 0; x < m.size(); ++x) {
      ++t.checked;
      if (is_k_connected(si_of_contraction(m, x), 3)) continue;
      if (is_super_minimally_k_connected(co_of_deletion(m, x), 3)) continue;
      t.fail(e.key, "element " + std::to_string(x) +
                        ": si(M/e) is not 3-connected and co(M\\e) is not sm3c");
    }
  });
  rb.part("sm3c_element_pairs", std::move(t));
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

SuiteReport suite_lemma32(const SuiteContext& ctx) {
  ReportBuilder rb("lemma32");
  Tally t = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_sm_3connected || m.size() < 7) return;
    for (const auto& tri : triangles(m)) {
      ++t.checked;
      bool ok = false;
      for (int x : tri.elements()) {
        if (is_super_minimally_k_connected(co_of_deletion(m, x), 3)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        t.fail(e.key, "triangle " + tri.to_string() + " has no x with co(M\\x) sm3c");
      }
    }
  });
  rb.part("sm3c_triangles", std::move(t));
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

SuiteReport suite_wheelgrowth(const SuiteContext& ctx) {
  ReportBuilder rb("wheelgrowth");
  Tally t = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_min_3connected) return;
    const auto table = m.rank_table();
    const std::uint64_t all = full_mask(m.size());
    std::optional<std::optional<WheelLabeling>> whole;
    for (int x = 0; x < m.size(); ++x) {
      for (int y = 0; y < m.size(); ++y) {
        if (x == y || !three_connected(table, all & ~bit(x) & ~bit(y), bit(y))) continue;
        const auto minor = recognize_wheel_or_whirl(delete_contract(m, x, y));
        if (!minor) continue;
        ++t.checked;
        if (!whole) whole = recognize_wheel_or_whirl(m);
        if (!*whole || (*whole)->k != minor->k + 1) {
          t.fail(e.key, "M\\" + std::to_string(x) + "/" + std::to_string(y) + " is " +
                            std::string(wheel_kind_name(minor->kind)) + " of rank " +
                            std::to_string(minor->k) +
                            " but M is not a wheel or whirl of the next rank");
        }
      }
    }
  });
  rb.part("min3c_pairs_with_wheel_minor", std::move(t));
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

SuiteReport suite_brittle(const SuiteContext& ctx) {
  ReportBuilder rb("brittle");
  const CanonicalForm u11 = canonical_form(uniform(1, 1));

  std::vector<const CorpusEntry*> census_ptrs;
  for (const auto& e : ctx.census_entries) census_ptrs.push_back(&e);
  std::vector<char> brittle(census_ptrs.size(), 0);
  parallel_for(census_ptrs.size(), ctx.threads, [&](std::size_t i) {
    const Matroid& m = census_ptrs[i]->matroid;
    brittle[i] = is_simple(m) && is_brittle(m) ? 1 : 0;
  });

  Tally free_bound;
  for (std::size_t i = 0; i < census_ptrs.size(); ++i) {
    const Matroid& m = census_ptrs[i]->matroid;
    if (!brittle[i] || !triangles(m).empty() || ctx.census[i].cf == u11) continue;
    ++free_bound.checked;
    if (m.size() > 2 * m.rank() - 2) {
      free_bound.fail(census_ptrs[i]->key, "triangle-free brittle with |E| = " +
                                               std::to_string(m.size()) + " > 2r - 2");
    }
  }

  Tally sm3c_bound;
  for (const auto* e : ctx.corpus()) {
    const Matroid& m = e->matroid;
    if (!e->flags.is_sm_3connected || m.size() < 4 || e->flags.triangle_count != 0) continue;
    ++sm3c_bound.checked;
    if (m.size() > 2 * m.rank() - 1) {
      sm3c_bound.fail(e->key, "triangle-free sm3c with |E| = " + std::to_string(m.size()) +
                                  " > 2r - 1");
    }
  }

  // Composition: direct sums and 2-sums of brittle parts with at most five
  // elements stay brittle.
  std::vector<const Matroid*> parts;
  for (std::size_t i = 0; i < census_ptrs.size(); ++i) {
    if (brittle[i] && census_ptrs[i]->matroid.size() <= 5) {
      parts.push_back(&census_ptrs[i]->matroid);
    }
  }
  std::vector<Tally> slots(parts.size());
  parallel_for(parts.size(), ctx.threads, [&](std::size_t i) {
    const Matroid& a = *parts[i];
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Matroid& b = *parts[j];
      if (j >= i) {
        const Matroid s = direct_sum(a, b);
        ++slots[i].checked;
        if (!is_brittle(s)) {
          slots[i].fail(matroid_key(s), "direct sum of brittle " + matroid_key(a) + " and " +
                                            matroid_key(b) + " is not brittle");
        }
      }
      if (a.size() < 3 || b.size() < 3) continue;
      for (int p = 0; p < a.size(); ++p) {
        if (is_coloop(a, p)) continue;
        for (int q = 0; q < b.size(); ++q) {
          if (is_coloop(b, q)) continue;
          const Matroid s = two_sum(a, b, p, q);
          ++slots[i].checked;
          if (!is_brittle(s)) {
            slots[i].fail(matroid_key(s), "2-sum of brittle " + matroid_key(a) + " at " +
                                              std::to_string(p) + " and " + matroid_key(b) +
                                              " at " + std::to_string(q) +
                                              " is not brittle");
          }
        }
      }
    }
  });
  Tally composition;
  for (auto& s : slots) composition.absorb(std::move(s));

  rb.part("triangle_free_brittle", std::move(free_bound));
  rb.part("triangle_free_sm3c", std::move(sm3c_bound));
  rb.part("composition", std::move(composition));
  rb.scope(corpus_scope(ctx) + "; composition over brittle census parts with n<=5");
  return rb.finish();
}

SuiteReport suite_triads(const SuiteContext& ctx) {
  ReportBuilder rb("triads");
  Tally cover = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_sm_3connected || m.size() < 8) return;
    ++t.checked;
    const long long eit = elements_in_triads(m);
    // eit >= (5|E| + 30) / 9, compared exactly.
    if (9 * eit < 5LL * m.size() + 30) {
      t.fail(e.key, "elements in triads " + std::to_string(eit) + " < (5*" +
                        std::to_string(m.size()) + "+30)/9");
    }
  });
  Tally count = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (!e.flags.is_sm_3connected || m.size() < 4) return;
    ++t.checked;
    const long long tri = static_cast<long long>(triads(m).size());
    // triads >= (r + 6) / 4, compared exactly.
    if (4 * tri < m.rank() + 6LL) {
      t.fail(e.key, "triad count " + std::to_string(tri) + " < (" +
                        std::to_string(m.rank()) + "+6)/4");
    }
  });
  rb.part("elements_in_triads_bound", std::move(cover));
  rb.part("triad_count_bound", std::move(count));
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

namespace {

// A k-separation {X, E - X} in the table's full matroid.
bool is_separation(std::span<const std::uint8_t> table, int n, std::uint64_t x, int k) {
  const std::uint64_t all = full_mask(n);
  const int sx = popcount(x);
  if (std::min(sx, n - sx) < k) return false;
  return table[x] + table[all & ~x] - table[all] <= k - 1;
}

void check_closure_moves(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  const int n = m.size();
  const auto table = m.rank_table();
  const std::uint64_t all = full_mask(n);
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t x = 1; x < all; ++x) {
      if (!is_separation(table, n, x, k)) continue;
      const ElementSet xs(n, x);
      const std::uint64_t reach =
          (closure(m, xs).bits() | coclosure(m, xs).bits()) & ~x;
      for (std::uint64_t b = reach; b != 0; b &= b - 1) {
        const std::uint64_t moved = x | (b & (~b + 1));
        ++t.checked;
        const bool sep = is_separation(table, n, moved, k);
        const bool expect = popcount(all & ~moved) >= k;
        if (sep != expect) {
          t.fail(e.key, std::to_string(k) + "-separation side " + xs.to_string() +
                            ": moving element " +
                            std::to_string(std::countr_zero(b)) +
                            (sep ? " keeps" : " breaks") + " the separation");
        }
      }
    }
  }
}

void check_witnesses(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  const int n = m.size();
  const auto table = m.rank_table();
  const std::uint64_t all = full_mask(n);
  for (int k = 1; k <= 3; ++k) {
    for (bool nonminimal : {false, true}) {
      ++t.checked;
      const int min_side = nonminimal ? k + 1 : k;
      std::uint64_t first = 0;
      for (std::uint64_t x = 1; n > 0 && x < bit(n - 1) && first == 0; ++x) {
        const int sx = popcount(x);
        if (std::min(sx, n - sx) >= min_side &&
            table[x] + table[all & ~x] - m.rank() <= k - 1) {
          first = x;
        }
      }
      const auto w = find_k_separation(m, k, nonminimal);
      const bool ok =
          w ? (w->side.bits() == first && w->order == k &&
               w->lambda_value == lambda(m, w->side) && w->lambda_value <= k - 1 &&
               std::min(w->side.count(), n - w->side.count()) >= min_side)
            : first == 0;
      if (!ok) {
        t.fail(e.key, "separation witness for k=" + std::to_string(k) +
                          " disagrees with a direct scan");
      }
    }
  }
}

void check_bixby(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.flags.is_3connected || m.size() < 4) return;
  for (int x = 0; x < m.size(); ++x) {
    ++t.checked;
    if (is_k_connected(si_of_contraction(m, x), 3)) continue;
    if (is_k_connected(co_of_deletion(m, x), 3)) continue;
    t.fail(e.key, "element " + std::to_string(x) +
                      ": neither si(M/e) nor co(M\\e) is 3-connected");
  }
}

void check_triangle_triad(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.flags.is_3connected || m.size() < 4) return;
  const auto table = m.rank_table();
  const std::uint64_t all = full_mask(m.size());
  const auto tds = triads(m);
  for (const auto& tri : triangles(m)) {
    const auto el = tri.elements();
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const int ex = el[a];
        const int f = el[b];
        const int g = el[3 - a - b];
        if (three_connected(table, all & ~bit(ex)) || three_connected(table, all & ~bit(f))) {
          continue;
        }
        ++t.checked;
        bool ok = false;
        for (const auto& td : tds) {
          if (td.contains(ex) && (td.contains(f) != td.contains(g))) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          t.fail(e.key, "triangle " + tri.to_string() + " with e=" + std::to_string(ex) +
                            ", f=" + std::to_string(f) +
                            ": no triad meets e and exactly one of f, g");
        }
      }
    }
  }
}

void check_contraction_cocircuit(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  const int n = m.size();
  const auto table = m.rank_table();
  const std::uint64_t all = full_mask(n);
  for (int level = 2; level <= 3; ++level) {
    if (n < 2 * (level - 1) || !detail::minor_is_k_connected(table, all, 0, level)) continue;
    for (int x = 0; x < n; ++x) {
      if (detail::minor_is_k_connected(table, all & ~bit(x), 0, level)) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x ||
            !detail::minor_is_k_connected(table, all & ~bit(x) & ~bit(y), bit(y), level)) {
          continue;
        }
        ++t.checked;
        bool ok = false;
        const std::uint64_t pair = bit(x) | bit(y);
        if (level == 2) {
          ok = detail::is_cocircuit_mask(table, n, pair);
        } else {
          for (int z = 0; z < n && !ok; ++z) {
            if ((pair & bit(z)) == 0 && detail::is_cocircuit_mask(table, n, pair | bit(z))) {
              ok = true;
            }
          }
        }
        if (!ok) {
          t.fail(e.key, "level " + std::to_string(level) + ", x=" + std::to_string(x) +
                            ", y=" + std::to_string(y) +
                            ": no cocircuit of that size contains x and y");
        }
      }
    }
  }
}

void check_nonessential(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  if (!e.flags.is_3connected || m.size() < 4) return;
  if (recognize_wheel_or_whirl(m)) return;
  ++t.checked;
  const int nonessential = m.size() - essential_elements(m).count();
  if (nonessential < 2) {
    t.fail(e.key, "3-connected, not a wheel or whirl, but only " +
                      std::to_string(nonessential) + " nonessential elements");
  }
}

void check_small_smkc(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  for (int k = 2; k <= 4; ++k) {
    ++t.checked;
    const bool smkc = is_super_minimally_k_connected(m, k);
    if (m.size() <= 2 * k - 2) {
      if (smkc != is_k_connected(m, k)) {
        t.fail(e.key, "k=" + std::to_string(k) +
                          ", |E| <= 2k-2: sm-k-c and k-connected disagree");
      }
    } else if (smkc && !is_minimally_k_connected(m, k)) {
      t.fail(e.key, "k=" + std::to_string(k) +
                        ": sm-k-c with |E| > 2k-2 but not minimally k-connected");
    }
  }
}

void check_flags(const CorpusEntry& e, const CensusRecord* rec, Tally& t) {
  ++t.checked;
  const PropertyFlags fresh = compute_flags(e.matroid);
  if (!(fresh == e.flags)) {
    t.fail(e.key, "stored property flags differ from recomputation");
  }
  if (rec && (rec->n != e.matroid.size() || rec->r != e.matroid.rank())) {
    t.fail(e.key, "stored n or r differ from the decoded matroid");
  }
}

}  // namespace

SuiteReport suite_background(const SuiteContext& ctx) {
  ReportBuilder rb("background");
  const auto corpus = ctx.corpus();
  rb.part("closure_moves", over_entries(corpus, ctx.threads, check_closure_moves));
  rb.part("separation_witness", over_entries(corpus, ctx.threads, check_witnesses));
  rb.part("bixby", over_entries(corpus, ctx.threads, check_bixby));
  rb.part("triangle_triad", over_entries(corpus, ctx.threads, check_triangle_triad));
  rb.part("contraction_cocircuit",
          over_entries(corpus, ctx.threads, check_contraction_cocircuit));
  rb.part("two_nonessential", over_entries(corpus, ctx.threads, check_nonessential));
  rb.part("small_sm_k", over_entries(corpus, ctx.threads, check_small_smkc));
  {
    std::vector<Tally> slots(corpus.size());
    parallel_for(corpus.size(), ctx.threads, [&](std::size_t i) {
      const CensusRecord* rec = i < ctx.census.size() ? &ctx.census[i] : nullptr;
      check_flags(*corpus[i], rec, slots[i]);
    });
    Tally t;
    for (auto& s : slots) t.absorb(std::move(s));
    rb.part("flag_recompute", std::move(t));
  }
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

// ---- algebra ------------------------------------------------------------------

namespace {

void check_rank_laws(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  const int n = m.size();
  const std::uint64_t all = full_mask(n);
  const Matroid d = dual(m);
  for (std::uint64_t x = 0; x <= all; ++x) {
    ++t.checked;
    const ElementSet xs(n, x);
    const int r = rank(m, xs);
    const int rs = corank(m, xs);
    if (r < 0 || r > std::min(xs.count(), m.rank())) {
      t.fail(e.key, "rank of " + xs.to_string() + " out of bounds");
    }
    if (lambda(m, xs) != r + rs - xs.count()) {
      t.fail(e.key, "connectivity formulas disagree on " + xs.to_string());
    }
    if (rs != rank(d, xs)) t.fail(e.key, "corank differs from dual rank on " + xs.to_string());
    for (int a = 0; a < n; ++a) {
      if (xs.contains(a)) continue;
      const int ra = m.rank_of(x | bit(a));
      if (ra < r || ra > r + 1) t.fail(e.key, "unit increase fails at " + xs.to_string());
      for (int b = a + 1; b < n; ++b) {
        if (xs.contains(b)) continue;
        if (ra + m.rank_of(x | bit(b)) < m.rank_of(x | bit(a) | bit(b)) + r) {
          t.fail(e.key, "submodularity fails at " + xs.to_string());
        }
      }
    }
    if (n <= 6 && closure(d, xs) != coclosure(m, xs)) {
      t.fail(e.key, "coclosure differs from dual closure on " + xs.to_string());
    }
    if (n <= 6 && restrict_to(m, xs) != delete_elements(m, xs.complement())) {
      t.fail(e.key, "restriction differs from deleting the complement");
    }
  }
  for (int a = 0; a < n; ++a) {
    ++t.checked;
    if (dual(delete_elements(m, one(n, a))) != contract_elements(d, one(n, a))) {
      t.fail(e.key, "deletion and contraction do not swap under duality at " +
                        std::to_string(a));
    }
  }
  ++t.checked;
  if (dual(d) != m) t.fail(e.key, "double dual differs");
}

void check_classes(const CorpusEntry& e, Tally& t) {
  const Matroid& m = e.matroid;
  const Matroid d = dual(m);
  ++t.checked;
  const auto s = series_classes(m);
  const auto p = parallel_classes(d);
  if (s.classes != p.classes || s.singular != p.singular) {
    t.fail(e.key, "series classes differ from parallel classes of the dual");
  }
  ++t.checked;
  if (cosimplify(m).matroid != dual(simplify(d).matroid)) {
    t.fail(e.key, "cosimplification differs from the dual of si of the dual");
  }
  const auto basis = m.bases().front();
  for (int x = 0; x < m.size(); ++x) {
    if (basis.contains(x)) continue;
    ++t.checked;
    const ElementSet c = fundamental_circuit(m, basis, x);
    const auto all = circuits(m, c.count());
    if (!c.contains(x) || !c.is_subset_of(basis.with(x)) ||
        std::find(all.begin(), all.end(), c) == all.end()) {
      t.fail(e.key, "fundamental circuit of " + std::to_string(x) + " is wrong");
    }
  }
  // Every circuit-hyperplane relaxes to a valid matroid with one more basis.
  for (const auto& c : circuits(m, m.rank())) {
    if (c.count() != m.rank() || closure(m, c) != c) continue;
    ++t.checked;
    const Matroid relaxed = relax_circuit_hyperplane(m, c);
    const auto bases = relaxed.bases();
    if (!validate_bases(bases, m.size()) || bases.size() != m.basis_masks().size() + 1) {
      t.fail(e.key, "relaxing " + c.to_string() + " is not a matroid with one more basis");
    }
  }
}

std::vector<std::uint64_t> sorted_circuits(const Matroid& m) {
  std::vector<std::uint64_t> out;
  for (const auto& c : circuits(m, m.size())) out.push_back(c.bits());
  std::sort(out.begin(), out.end());
  return out;
}

void check_two_sum_law(const Matroid& a, const Matroid& b, int p, int q,
                       const std::string& label, Tally& t) {
  ++t.checked;
  const Matroid s = two_sum(a, b, p, q);
  const std::uint64_t ka = full_mask(a.size()) & ~bit(p);
  const std::uint64_t kb = full_mask(b.size()) & ~bit(q);
  const int shift = a.size() - 1;
  std::vector<std::uint64_t> through_a;
  std::vector<std::uint64_t> through_b;
  std::vector<std::uint64_t> expect;
  for (std::uint64_t c : sorted_circuits(a)) {
    ((c & bit(p)) ? through_a : expect).push_back(detail::compress(c & ka, ka));
  }
  for (std::uint64_t c : sorted_circuits(b)) {
    const std::uint64_t placed = detail::compress(c & kb, kb) << shift;
    if (c & bit(q)) {
      through_b.push_back(placed);
    } else {
      expect.push_back(placed);
    }
  }
  for (std::uint64_t x : through_a) {
    for (std::uint64_t y : through_b) expect.push_back(x | y);
  }
  std::sort(expect.begin(), expect.end());
  if (sorted_circuits(s) != expect) t.fail(matroid_key(s), label + ": circuit law fails");
  ++t.checked;
  if (s.rank() != a.rank() + b.rank() - 1) t.fail(matroid_key(s), label + ": rank law fails");
  // Rank formula across the two sides.
  ++t.checked;
  const std::uint64_t all = full_mask(s.size());
  for (std::uint64_t y = 0; y <= all; ++y) {
    const std::uint64_t ya = detail::expand(y & full_mask(shift), ka);
    const std::uint64_t yb = detail::expand(y >> shift, kb);
    const bool span_a = a.rank_of(ya | bit(p)) == a.rank_of(ya);
    const bool span_b = b.rank_of(yb | bit(q)) == b.rank_of(yb);
    const int expected = a.rank_of(ya) + b.rank_of(yb) - (span_a && span_b ? 1 : 0);
    if (s.rank_of(y) != expected) {
      t.fail(matroid_key(s), label + ": rank formula fails on " + ElementSet(s.size(), y).to_string());
      break;
    }
  }
}

}  // namespace

SuiteReport suite_algebra(const SuiteContext& ctx) {
  ReportBuilder rb("algebra");
  const auto corpus = ctx.corpus();
  rb.part("rank_laws", over_entries(corpus, ctx.threads, check_rank_laws));
  rb.part("classes_and_circuits", over_entries(ctx.corpus(), ctx.threads, check_classes));

  Tally reps;
  {
    ++reps.checked;
    const Matroid u = uniform(2, 4);
    const Matroid lin = Matroid::linear(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    const Matroid bases = Matroid::from_bases(4, u.bases());
    const auto tu = u.rank_table();
    const auto tl = lin.rank_table();
    const auto tb = bases.rank_table();
    if (!std::equal(tu.begin(), tu.end(), tl.begin(), tl.end()) ||
        !std::equal(tu.begin(), tu.end(), tb.begin(), tb.end())) {
      reps.fail(matroid_key(u), "uniform, linear and bases representations disagree");
    }
    for (int k = 2; k <= std::min(ctx.k_max, 6); ++k) {
      ++reps.checked;
      const Matroid w = wheel(k).matroid;
      const Matroid wb = Matroid::from_bases(w.size(), w.bases());
      const auto t1 = w.rank_table();
      const auto t2 = wb.rank_table();
      if (!std::equal(t1.begin(), t1.end(), t2.begin(), t2.end())) {
        reps.fail(matroid_key(w), "graphic and bases representations disagree");
      }
    }
  }
  rb.part("representations", std::move(reps));

  Tally sums;
  const std::vector<std::pair<std::string, Matroid>> pieces = {
      {"U_{2,3}", uniform(2, 3)}, {"U_{2,4}", uniform(2, 4)}, {"wheel(3)", wheel(3).matroid}};
  for (const auto& [na, a] : pieces) {
    for (const auto& [nb, b] : pieces) {
      for (int p = 0; p < a.size(); ++p) {
        for (int q = 0; q < b.size(); ++q) {
          check_two_sum_law(a, b, p, q,
                            na + " at " + std::to_string(p) + " with " + nb + " at " +
                                std::to_string(q),
                            sums);
        }
      }
      ++sums.checked;
      const Matroid s = direct_sum(a, b);
      if (s.rank() != a.rank() + b.rank()) {
        sums.fail(matroid_key(s), "direct sum rank is not additive");
      }
    }
  }
  rb.part("sums", std::move(sums));
  rb.scope(corpus_scope(ctx));
  return rb.finish();
}

// ---- enumeration ----------------------------------------------------------------

SuiteReport suite_enumeration(const SuiteContext& ctx) {
  ReportBuilder rb("enumeration");
  const int oracle_max = std::min(ctx.n_max, kMaxNaiveSize);
  const auto levels = enumerate_matroids(oracle_max, ctx.threads);
  std::map<int, std::vector<CanonicalForm>> by_size;
  for (const auto& rec : ctx.census) by_size[rec.n].push_back(rec.cf);

  Tally oracle;
  for (int n = 0; n <= oracle_max; ++n) {
    ++oracle.checked;
    const auto naive = naive_enumerate(n);
    if (naive != levels[n]) {
      oracle.fail("n=" + std::to_string(n),
                  "extension enumeration found " + std::to_string(levels[n].size()) +
                      " classes, direct scan found " + std::to_string(naive.size()));
    }
    if (n >= 1 && by_size[n] != levels[n]) {
      oracle.fail("n=" + std::to_string(n), "census classes differ from a fresh enumeration");
    }
  }
  {
    // A loaded census must agree with a freshly built one on small sizes.
    ++oracle.checked;
    const auto fresh = census(std::min(ctx.n_max, 4), ctx.threads);
    std::vector<CensusRecord> stored;
    for (const auto& rec : ctx.census) {
      if (rec.n <= 4) stored.push_back(rec);
    }
    if (fresh != stored) oracle.fail("n<=4", "census records differ from a fresh build");
  }

  std::set<CanonicalForm> all_forms;
  for (const auto& rec : ctx.census) all_forms.insert(rec.cf);
  Tally duality = over_entries(ctx.corpus(), ctx.threads, [&](const CorpusEntry& e, Tally& t) {
    if (e.constructed) return;
    ++t.checked;
    if (!all_forms.count(canonical_form(dual(e.matroid)))) {
      t.fail(e.key, "dual class missing from the census");
    }
    ++t.checked;
    if (!validate_bases(e.matroid.bases(), e.matroid.size())) {
      t.fail(e.key, "census class fails basis exchange");
    }
  });

  Tally symmetry;
  for (int n = 1; n <= ctx.n_max; ++n) {
    std::vector<long long> per_rank(n + 1, 0);
    for (const auto& rec : ctx.census) {
      if (rec.n == n) ++per_rank[rec.r];
    }
    for (int r = 0; r <= n; ++r) {
      ++symmetry.checked;
      if (per_rank[r] != per_rank[n - r]) {
        symmetry.fail("n=" + std::to_string(n),
                      "rank " + std::to_string(r) + " and rank " + std::to_string(n - r) +
                          " class counts differ");
      }
    }
  }

  Tally cuts = over_entries(ctx.corpus(), ctx.threads, [](const CorpusEntry& e, Tally& t) {
    const Matroid& m = e.matroid;
    if (e.constructed || m.size() > 5) return;
    const auto fl = flats(m);
    std::size_t closed = 0;
    for (std::uint64_t x = 0; x <= full_mask(m.size()); ++x) {
      if (closure(m, ElementSet(m.size(), x)).bits() == x) ++closed;
    }
    ++t.checked;
    if (fl.size() != closed) t.fail(e.key, "flat list differs from a closure scan");
    for (const auto& cut : modular_cuts(m)) {
      ++t.checked;
      if (!is_modular_cut(m, cut)) {
        t.fail(e.key, "enumerated cut is not modular");
        continue;
      }
      const Matroid ext = extend(m, cut);
      if (!validate_bases(ext.bases(), ext.size()) ||
          delete_elements(ext, one(ext.size(), m.size())) != m) {
        t.fail(e.key, "extension is not a matroid extending the parent");
      }
    }
  });

  rb.part("oracle_equivalence", std::move(oracle));
  rb.part("duality_closure", std::move(duality));
  rb.part("rank_symmetry", std::move(symmetry));
  rb.part("modular_cuts", std::move(cuts));
  rb.scope("direct-scan oracle up to n=" + std::to_string(oracle_max) + "; census n<=" +
           std::to_string(ctx.n_max));
  return rb.finish();
}

// ---- dispatch -------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table1",  "prop11", "density",    "lemma31", "lemma32",     "wheelgrowth",
      "brittle", "triads", "background", "algebra", "enumeration"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteContext& ctx) {
  if (name == "table1") return suite_table1(ctx);
  if (name == "prop11") return suite_prop11(ctx);
  if (name == "density") return suite_density(ctx);
  if (name == "lemma31") return suite_lemma31(ctx);
  if (name == "lemma32") return suite_lemma32(ctx);
  if (name == "wheelgrowth") return suite_wheelgrowth(ctx);
  if (name == "brittle") return suite_brittle(ctx);
  if (name == "triads") return suite_triads(ctx);
  if (name == "background") return suite_background(ctx);
  if (name == "algebra") return suite_algebra(ctx);
  if (name == "enumeration") return suite_enumeration(ctx);
  throw InputError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all(const SuiteContext& ctx) {
  reset_op_coverage();
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, ctx));
  ReportBuilder rb("coverage");
  Tally t;
  t.checked = static_cast<long long>(Op::kCount_);
  for (auto op : uncovered_ops()) {
    t.fail("op:" + std::string(op), "operation never exercised by the suites");
  }
  rb.part("operations", std::move(t));
  out.push_back(rb.finish());
  return out;
}

}  // namespace mcon
