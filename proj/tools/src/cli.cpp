// Copyright 2026 The hhcalc Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "hh/bar.hpp"
#include "hh/error.hpp"
#include "hh/io.hpp"
#include "hh/parallel.hpp"
#include "hh/qcomplex.hpp"
#include "hh/witnesses.hpp"

namespace hh::cli {
namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success (theorem commands: non-vanishing witnessed)\n"
    "  1  duality mismatch (first mismatching n on stderr) or a failed witness check\n"
    "  2  parse or validation failure\n"
    "  3  a degree, word or path cap was exceeded\n"
    "  4  theorem inapplicable or hypothesis not witnessed\n";

struct RunConfig {
  std::string input;
  std::string field;
  int pmax = 4;
  std::optional<int> nmax;
  int cap = kDefaultWordCap;
  std::string out = "text";
  unsigned jobs = 0;
  bool skip_validation = false;
  bool unnormalized = false;
  std::string pair;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::optional<FieldContext> field_override(const RunConfig& c) {
  if (c.field.empty()) return std::nullopt;
  return FieldContext::parse(c.field);
}

void require_valid(const GradedAlgebra& a, const RunConfig& c) {
  if (c.skip_validation) return;
  const auto diags = validate(a);
  if (diags.empty()) return;
  std::string msg = "algebra fails validation:";
  for (const auto& d : diags) msg += "\n  " + d.law + ": " + d.message;
  throw ValidationError(msg);
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.out == f) return;
  }
  throw ValidationError("--out " + c.out + " is not available for this command");
}

int cmd_bar(const RunConfig& c, std::ostream& out) {
  const GradedAlgebra a = load_algebra(read_file(c.input), field_override(c));
  require_valid(a, c);
  const auto norm = c.unnormalized ? Normalization::kUnnormalized : Normalization::kNormalized;
  HomologyTable t = hh_table(a, c.pmax, resolve_jobs(c.jobs), norm);
  if (c.nmax) {
    if (!a.is_graded()) throw ValidationError("--nmax needs a graded algebra");
    const GradedAlgebra even = a.is_even() ? a : regrade_even(a);
    t.negative = negative_degree_dims(even, *c.nmax, resolve_jobs(c.jobs));
  }
  if (c.out == "json") {
    out << to_json(t);
  } else if (c.out == "csv") {
    out << to_csv(t);
  } else {
    out << to_text(t);
  }
  return kOk;
}

int cmd_duality(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "csv", "text"});
  const GradedAlgebra a = load_algebra(read_file(c.input), field_override(c));
  require_valid(a, c);
  const DualityReport r =
      duality_check(a, c.nmax.value_or(8), c.cap, resolve_jobs(c.jobs), !c.skip_validation);
  if (c.out == "json") {
    out << to_json(r);
  } else if (c.out == "csv") {
    out << "n,dim_Q,dim_bar,match\n";
    for (const auto& row : r.rows) {
      out << row.n << ',' << row.dim_q << ',' << row.dim_bar << ',' << (row.match() ? 1 : 0)
          << '\n';
    }
  } else {
    out << to_text(r);
  }
  if (const auto bad = r.first_mismatch()) {
    err << "duality mismatch at n = " << *bad << '\n';
    return kMismatch;
  }
  return kOk;
}

int report_exit(const WitnessReport& r, const RunConfig& c, std::ostream& out) {
  out << (c.out == "json" ? to_json(r) : to_text(r));
  switch (r.status) {
    case WitnessStatus::kWitnessed: return kOk;
    case WitnessStatus::kInapplicable:
    case WitnessStatus::kHypothesisNotWitnessed: return kNotWitnessed;
    case WitnessStatus::kFailed: break;
  }
  return kMismatch;
}

int cmd_thm1(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const std::string text = read_file(c.input);
  const int n_max = c.nmax.value_or(5);
  switch (detect_input_kind(text)) {
    case InputKind::kPresentation:
      return report_exit(theorem1_report(presentation_from_json(text, field_override(c)), n_max),
                         c, out);
    case InputKind::kQuiver:
      return report_exit(theorem1_quiver_report(quiver_from_json(text, field_override(c)), n_max),
                         c, out);
    default:
      throw ValidationError("thm1 needs a presentation or a quiver file");
  }
}

int cmd_thm2(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const GradedAlgebra a = load_algebra(read_file(c.input), field_override(c));
  require_valid(a, c);
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  if (!c.pair.empty()) {
    const auto comma = c.pair.find(',');
    if (comma == std::string::npos) throw ValidationError("--pair expects two labels: x,y");
    const auto i1 = a.index_of(c.pair.substr(0, comma));
    const auto i2 = a.index_of(c.pair.substr(comma + 1));
    if (!i1 || !i2) throw ValidationError("--pair names an unknown basis element");
    pair = std::pair{*i1, *i2};
  }
  return report_exit(theorem2_report(a, c.nmax.value_or(4), pair, c.cap), c, out);
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const auto family = family_from_json(read_file(c.input), field_override(c));
  const int n_max = c.nmax.value_or(6);
  const auto rows = han_family_scan(family, n_max, resolve_jobs(c.jobs));
  out << (c.out == "json" ? scan_to_json(rows, n_max) : scan_to_text(rows, n_max));
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("input", c.input, "JSON input file")->required();
  sub->add_option("--field", c.field, "Ground field: q or fp:P (overrides the file)");
  sub->add_option("--out", c.out, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");
  sub->add_flag("--skip-validation", c.skip_validation,
                "Do not reject algebras that break the algebra laws");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hh: Hochschild homology of finite-dimensional algebras", "hh"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  RunConfig c;

  auto* bar = app.add_subcommand("bar", "HH_p(A)^q from the normalized Hochschild complex");
  add_common(bar, c);
  bar->add_option("--pmax", c.pmax, "Largest homological degree")->check(CLI::NonNegativeNumber);
  bar->add_option("--nmax", c.nmax, "Also assemble dim HH_{-n} for n <= N")
      ->check(CLI::NonNegativeNumber);
  bar->add_flag("--unnormalized", c.unnormalized, "Use the unnormalized complex");

  auto* duality = app.add_subcommand("duality", "Compare dim H_n(Q) with dim HH_{-n}");
  add_common(duality, c);
  duality->add_option("--nmax", c.nmax, "Largest n (default 8)")->check(CLI::NonNegativeNumber);
  duality->add_option("--cap", c.cap, "Word degree cap")->check(CLI::PositiveNumber);

  auto* thm1 = app.add_subcommand("thm1", "Retraction witness for a split presentation");
  add_common(thm1, c);
  thm1->add_option("--nmax", c.nmax, "Largest n (default 5)")->check(CLI::NonNegativeNumber);

  auto* thm2 = app.add_subcommand("thm2", "Cycle witness X_1..X_N in Q_*");
  add_common(thm2, c);
  thm2->add_option("--nmax", c.nmax, "Largest n (default 4)")->check(CLI::PositiveNumber);
  thm2->add_option("--cap", c.cap, "Word degree cap")->check(CLI::PositiveNumber);
  thm2->add_option("--pair", c.pair, "Basis labels x,y to use instead of searching");

  auto* scan = app.add_subcommand("scan", "dim HH_n over a family of algebras");
  add_common(scan, c);
  scan->add_option("--nmax", c.nmax, "Largest n (default 6)")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (bar->parsed()) return cmd_bar(c, out);
    if (duality->parsed()) return cmd_duality(c, out, err);
    if (thm1->parsed()) return cmd_thm1(c, out);
    if (thm2->parsed()) return cmd_thm2(c, out);
    if (scan->parsed()) return cmd_scan(c, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const HypothesisError& e) {
    err << "hypothesis: " << e.what() << '\n';
    return kNotWitnessed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace hh::cli
