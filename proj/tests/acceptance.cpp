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

// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "mcon/canonical.hpp"
#include "mcon/cli.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/constructions.hpp"
#include "mcon/enumeration.hpp"
#include "mcon/suites.hpp"

using namespace mcon;

namespace {

constexpr int kNMax = 8;
constexpr int kKMax = 7;

// Wall-clock budgets in seconds.
constexpr double kBudgetTable = 10.0;
constexpr double kBudgetCensus = 600.0;
constexpr double kBudgetCheck = 60.0;
constexpr double kBudgetProperty = 900.0;
constexpr double kBudgetOracle = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

long long part(const SuiteReport& r, const std::string& name) {
  for (const auto& [k, v] : r.parts) {
    if (k == name) return v;
  }
  return -1;
}

std::string first_fail(const SuiteReport& r) {
  if (r.passed()) return "";
  return "; first counterexample " + r.fails.front().key + ": " + r.fails.front().detail;
}

int failures = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " ("
            << detail << ")" << std::endl;
  if (!ok) ++failures;
}

std::string timing(double s, double budget) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s, budget " << budget << " s";
  return o.str();
}

std::string strip_elapsed(const std::string& text) {
  static const std::regex elapsed("\"elapsed_s\":[0-9.eE+-]+");
  return std::regex_replace(text, elapsed, "\"elapsed_s\":0");
}

}  // namespace

int main() {
  const int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  const auto census_start = Clock::now();
  const SuiteContext ctx = make_context(kNMax, kKMax, threads);
  const double census_s = seconds_since(census_start);
  std::cout << "corpus: " << ctx.census.size() << " census classes on 1.." << kNMax
            << " elements, " << ctx.constructed.size() << " constructed wheels and whirls, "
            << timing(census_s, kBudgetCensus) << std::endl;

  {
    const SuiteReport r = suite_table1(ctx);
    const bool ok = r.passed() && r.checked == 6 && part(r, "size_1") == 2 &&
                    part(r, "size_2") == 1 && part(r, "size_3") == 2 &&
                    part(r, "size_4") == 1 && r.elapsed_s < kBudgetTable;
    verdict(1, ok, "3-connected classes on at most 4 elements are the six listed uniform matroids",
            "checked " + std::to_string(r.checked) + ", " +
                timing(r.elapsed_s, kBudgetTable) + first_fail(r));
  }
  {
    const SuiteReport r = suite_prop11(ctx);
    const bool ok = r.passed() && part(r, "sm2c_size_bound") == 1 + kNMax &&
                    census_s < kBudgetCensus && r.elapsed_s < kBudgetCheck;
    verdict(2, ok, "super-minimally 2-connected classes are U_{1,1} and U_{r,r+1}, r <= 7",
            std::to_string(part(r, "sm2c_size_bound")) + " classes, " +
                timing(r.elapsed_s, kBudgetCheck) + first_fail(r));
  }
  {
    const SuiteReport r = suite_density(ctx);
    const bool ok = r.passed() && part(r, "equality_classes") == 5 &&
                    part(r, "wheels_whirls_sm3c") == 2 * (kKMax - 2) &&
                    r.elapsed_s + census_s < kBudgetProperty;
    verdict(3, ok, "sm3c classes satisfy |E| <= 2r with the five equality classes",
            "checked " + std::to_string(r.checked) + ", " +
                timing(r.elapsed_s, kBudgetProperty) + first_fail(r));
  }
  {
    double total = 0;
    bool ok = true;
    std::string detail;
    for (const auto& r : {suite_lemma31(ctx), suite_lemma32(ctx), suite_wheelgrowth(ctx)}) {
      ok = ok && r.passed() && r.checked > 0;
      total += r.elapsed_s;
      detail += r.suite + " " + std::to_string(r.checked) + " checked" + first_fail(r) + ", ";
    }
    ok = ok && total < kBudgetProperty;
    verdict(4, ok, "element dichotomy, triangle deletion and wheel growth properties",
            detail + timing(total, kBudgetProperty));
  }
  {
    const SuiteReport r = suite_background(ctx);
    const bool ok = r.passed() && part(r, "bixby") > 0 && part(r, "triangle_triad") > 0 &&
                    part(r, "two_nonessential") > 0 && part(r, "contraction_cocircuit") > 0 &&
                    part(r, "closure_moves") > 0 && part(r, "small_sm_k") > 0 &&
                    r.elapsed_s < kBudgetProperty;
    verdict(5, ok, "background connectivity properties",
            "checked " + std::to_string(r.checked) + ", " +
                timing(r.elapsed_s, kBudgetProperty) + first_fail(r));
  }
  {
    const SuiteReport r = suite_brittle(ctx);
    const bool ok = r.passed() && part(r, "triangle_free_brittle") > 0 &&
                    part(r, "triangle_free_sm3c") > 0;
    verdict(6, ok, "triangle-free brittle and sm3c size bounds, exact integers",
            "checked " + std::to_string(r.checked) + first_fail(r));
  }
  {
    const SuiteReport r = suite_triads(ctx);
    const int eit_w4 = elements_in_triads(wheel(4).matroid);
    const int triads_w3 = static_cast<int>(triads(wheel(3).matroid).size());
    const bool ok = r.passed() && eit_w4 == 8 && 9 * eit_w4 >= 70 && triads_w3 == 4 &&
                    4 * triads_w3 >= 9;
    verdict(7, ok, "triad coverage and triad count bounds, exact rationals",
            "wheel(4) eit " + std::to_string(eit_w4) + " >= 70/9, wheel(3) triads " +
                std::to_string(triads_w3) + " >= 9/4, checked " + std::to_string(r.checked) +
                first_fail(r));
  }
  {
    const auto start = Clock::now();
    const auto levels = enumerate_matroids(kMaxNaiveSize, threads);
    bool ok = true;
    std::string counts;
    for (int n = 0; n <= kMaxNaiveSize; ++n) {
      const auto naive = naive_enumerate(n);
      ok = ok && naive == levels[n];
      counts += std::to_string(levels[n].size()) + (n < kMaxNaiveSize ? "/" : "");
    }
    std::set<CanonicalForm> all;
    for (const auto& rec : ctx.census) all.insert(rec.cf);
    bool dual_closed = true;
    for (const auto& rec : ctx.census) {
      dual_closed = dual_closed && all.count(canonical_form(dual(rec.cf.decode()))) != 0;
    }
    const SuiteReport r = suite_enumeration(ctx);
    const double s = seconds_since(start);
    ok = ok && dual_closed && r.passed() && s < kBudgetOracle;
    verdict(8, ok, "extension enumeration equals the direct scan for n <= 6; census closed under duality",
            "classes " + counts + ", duality " + (dual_closed ? "closed" : "open") + ", " +
                timing(s, kBudgetOracle) + first_fail(r));
  }
  {
    const std::vector<std::string> base = {"verify", "--suite", "all", "--nmax",
                                           std::to_string(kNMax), "--kmax",
                                           std::to_string(kKMax)};
    std::ostringstream out1, out2, err1, err2;
    auto args1 = base;
    args1.insert(args1.end(), {"--threads", "1"});
    auto args2 = base;
    args2.insert(args2.end(), {"--threads", "4"});
    const int c1 = cli_main(args1, out1, err1);
    const int c2 = cli_main(args2, out2, err2);
    const bool same = strip_elapsed(out1.str()) == strip_elapsed(out2.str());
    const bool ok = same && c1 == c2 && err1.str() == err2.str();
    std::size_t lines = 0;
    for (char ch : out1.str()) lines += ch == '\n' ? 1 : 0;
    verdict(9, ok, "verify --suite all is identical at 1 and 4 threads apart from elapsed times",
            std::to_string(lines) + " report lines, exit codes " + std::to_string(c1) + "/" +
                std::to_string(c2));
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
