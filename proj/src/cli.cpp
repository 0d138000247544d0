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

#include "mcon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcon/canonical.hpp"
#include "mcon/census.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/constructions.hpp"
#include "mcon/error.hpp"
#include "mcon/suites.hpp"
#include "mcon/text_format.hpp"

namespace mcon {
namespace {

struct Options {
  std::string file;
  std::string file_b;
  std::string output;
  int k = 3;
  std::string prop;
  std::string kind;
  std::vector<int> params;
  int n_max = 8;
  int k_max = 7;
  std::string filter;
  std::string suite = "all";
  int threads = 0;
  std::string census_path;
};

int default_threads() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

int run_check(const Options& o, std::ostream& out) {
  const Matroid m = read_matroid_file(o.file);
  bool result = false;
  if (o.prop == "connected") {
    result = is_k_connected(m, o.k);
  } else if (o.prop == "minimal") {
    result = is_minimally_k_connected(m, o.k);
  } else if (o.prop == "superminimal") {
    result = is_super_minimally_k_connected(m, o.k);
  } else {
    result = is_simple(m) && is_brittle(m);
  }
  out << (result ? "true" : "false") << '\n';
  return result ? kExitPass : kExitFail;
}

int run_props(const Options& o, std::ostream& out) {
  const Matroid m = read_matroid_file(o.file);
  const PropertyFlags flags = compute_flags(m);
  if (m.size() <= kMaxCanonicalSize) {
    out << census_record_to_json({canonical_form(m), m.size(), m.rank(), flags}) << '\n';
    return kExitPass;
  }
  // Above the canonical-form limit the record carries a labeled key.
  auto j = nlohmann::ordered_json::parse(
      census_record_to_json({CanonicalForm{}, m.size(), m.rank(), flags}));
  j["cf"] = matroid_key(m);
  out << j.dump() << '\n';
  return kExitPass;
}

int run_construct(const Options& o, std::ostream& out) {
  Matroid m;
  const auto need = [&](std::size_t count, const char* usage) {
    if (o.params.size() != count) throw InputError(std::string("usage: construct ") + usage);
  };
  if (o.kind == "wheel") {
    need(1, "wheel <k> -o <file>");
    m = wheel(o.params[0]).matroid;
  } else if (o.kind == "whirl") {
    need(1, "whirl <k> -o <file>");
    m = whirl(o.params[0]).matroid;
  } else {
    need(2, "uniform <r> <n> -o <file>");
    m = uniform(o.params[0], o.params[1]);
  }
  if (o.output.empty() || o.output == "-") {
    out << to_text(m);
  } else {
    write_matroid_file(o.output, m);
  }
  return kExitPass;
}

int run_census(const Options& o, std::ostream& out) {
  std::optional<CensusFilter> filter;
  if (!o.filter.empty()) filter = parse_census_filter(o.filter);
  auto records = census(o.n_max, o.threads > 0 ? o.threads : default_threads());
  if (filter) records = filter_census(records, *filter);
  if (o.output.empty() || o.output == "-") {
    write_census(out, records);
    return kExitPass;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot open '" + o.output + "' for writing");
  write_census(file, records);
  if (!file) throw InputError("failed writing '" + o.output + "'");
  return kExitPass;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw InputError("unknown suite '" + o.suite + "'");
  }
  std::optional<std::vector<CensusRecord>> loaded;
  if (!o.census_path.empty()) {
    std::ifstream file(o.census_path);
    if (!file) throw InputError("cannot open census '" + o.census_path + "'");
    loaded = read_census(file);
  }
  const int threads = o.threads > 0 ? o.threads : default_threads();
  const SuiteContext ctx = make_context(o.n_max, o.k_max, threads, std::move(loaded));
  std::vector<SuiteReport> reports;
  if (o.suite == "all") {
    reports = run_all(ctx);
  } else {
    reports.push_back(run_suite(o.suite, ctx));
  }
  bool passed = true;
  for (const auto& r : reports) {
    out << report_to_json(r) << '\n';
    if (!r.passed()) {
      passed = false;
      err << r.suite << ": " << r.fails.size() << " counterexample(s); first "
          << r.fails.front().key << ": " << r.fails.front().detail << '\n';
    }
  }
  return passed ? kExitPass : kExitFail;
}

int run_iso(const Options& o, std::ostream& out) {
  const Matroid a = read_matroid_file(o.file);
  const Matroid b = read_matroid_file(o.file_b);
  const bool iso = are_isomorphic(a, b);
  out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return iso ? kExitPass : kExitFail;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid connectivity toolkit", "mcon"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Test a connectivity property of a matroid file");
  check->add_option("file", o.file, "Matroid file")->required();
  check->add_option("--k", o.k, "Connectivity level")->check(CLI::Range(2, 64));
  check->add_option("--prop", o.prop, "Property")
      ->required()
      ->check(CLI::IsMember({"connected", "minimal", "superminimal", "brittle"}));

  auto* props = app.add_subcommand("props", "Print property flags as one ndjson line");
  props->add_option("file", o.file, "Matroid file")->required();

  auto* construct = app.add_subcommand("construct", "Write a wheel, whirl or uniform matroid");
  construct->add_option("kind", o.kind, "wheel, whirl or uniform")
      ->required()
      ->check(CLI::IsMember({"wheel", "whirl", "uniform"}));
  construct->add_option("params", o.params, "k for wheel and whirl; r n for uniform")
      ->required();
  construct->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* cen = app.add_subcommand("census", "Enumerate matroids with property flags");
  cen->add_option("--nmax", o.n_max, "Largest ground set")->required();
  cen->add_option("--filter", o.filter,
                  "3connected, min3c, sm3c, sm2c, brittle or trianglefree");
  cen->add_option("-o,--output", o.output, "Output ndjson (default stdout)");
  cen->add_option("--threads", o.threads, "Worker threads (default: all cores)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = {"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", o.suite, "Suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--nmax", o.n_max, "Census size");
  verify->add_option("--kmax", o.k_max, "Largest wheel and whirl rank");
  verify->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  verify->add_option("--census", o.census_path, "Prebuilt census ndjson");

  auto* iso = app.add_subcommand("iso", "Test two matroid files for isomorphism");
  iso->add_option("a", o.file, "First matroid file")->required();
  iso->add_option("b", o.file_b, "Second matroid file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitInput;
  }

  try {
    if (*check) return run_check(o, out);
    if (*props) return run_props(o, out);
    if (*construct) return run_construct(o, out);
    if (*cen) return run_census(o, out);
    if (*verify) return run_verify(o, out, err);
    if (*iso) return run_iso(o, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace mcon
