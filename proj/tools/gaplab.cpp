// Copyright 2026 The gaplab authors
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

// gaplab: prime-gap and prime-count bound verification campaigns.
// Exit codes: 0 = success / claim holds, 1 = violations found,
// 2 = usage or configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gaplab/bounds.hpp"
#include "gaplab/gaps.hpp"
#include "gaplab/report.hpp"
#include "gaplab/sieve.hpp"
#include "gaplab/verify.hpp"

namespace {

using namespace gaplab;

struct Settings {
  u64 segment_size = SieveConfig{}.segment_size;
  u64 verify_chunk = VerifyOptions{}.chunk_size;
  u64 scan_chunk = ScanOptions{}.chunk_size;
  unsigned parallelism = 1;
  std::vector<double> ultra_epsilons = {0.1, 0.25, 0.5};
  bool progress = false;

  SieveConfig sieve() const { return {segment_size}; }
  ScanOptions scan() const { return {sieve(), scan_chunk, parallelism}; }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.sieve = sieve();
    v.chunk_size = verify_chunk;
    v.parallelism = parallelism;
    return v;
  }
};

u64 parse_u64_str(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(what + ": bad integer '" + s + "'");
  return std::stoull(s);
}

std::vector<double> parse_eps_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size() || !(v > 0))
      throw std::invalid_argument("ultra.epsilons: bad value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("ultra.epsilons: empty list");
  return out;
}

// Precedence: flags > config file > environment > defaults. Flags are
// applied by the caller after this returns.
Settings load_settings(const std::optional<std::string>& config_path) {
  Settings s;
  if (const char* env = std::getenv("GAPLAB_SEGMENT_SIZE"))
    s.segment_size = parse_u64_str(env, "GAPLAB_SEGMENT_SIZE");
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw std::invalid_argument("config: cannot open " + *config_path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      auto trim = [](std::string& t) {
        t.erase(0, t.find_first_not_of(" \t\r"));
        t.erase(t.find_last_not_of(" \t\r") + 1);
      };
      trim(line);
      if (line.empty()) continue;
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                    ": expected key = value");
      std::string key = line.substr(0, eq), val = line.substr(eq + 1);
      trim(key);
      trim(val);
      if (key == "sieve.segment_size")
        s.segment_size = parse_u64_str(val, key);
      else if (key == "verify.chunk_size")
        s.verify_chunk = parse_u64_str(val, key);
      else if (key == "scan.chunk_size")
        s.scan_chunk = parse_u64_str(val, key);
      else if (key == "parallelism")
        s.parallelism = static_cast<unsigned>(parse_u64_str(val, key));
      else if (key == "ultra.epsilons")
        s.ultra_epsilons = parse_eps_list(val);
      else
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (s.segment_size < 64)
    throw std::invalid_argument("segment_size must be >= 64");
  return s;
}

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (!out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*out);
  if (!f) throw std::invalid_argument("cannot write " + *out);
  f << text;
}

std::string verify_table(const VerificationReport& rep) {
  std::ostringstream os;
  bool gap = rep.claim.id == ClaimId::GapMerit;
  os << "claim " << rep.claim.label() << '\n';
  if (rep.claim.id == ClaimId::Prop1 || rep.claim.id == ClaimId::Prop2)
    os << "k " << rep.claim.k << '\n';
  if (rep.claim.premise_n) os << "premise_n " << *rep.claim.premise_n << '\n';
  if (gap)
    os << "kind " << merit_kind_token(rep.claim.merit) << '\n'
       << "bound " << report::format_real(rep.claim.gap_bound) << '\n';
  os << "range " << rep.n_lo << ' ' << rep.n_hi << '\n'
     << "rows_checked " << rep.rows_checked << '\n'
     << "violations " << rep.violations.size() << '\n';
  if (!rep.violations.empty()) {
    os << (gap ? "# n p_prev gap actual bound\n" : "# n actual bound\n");
    for (const auto& r : rep.violations) {
      os << r.n << ' ';
      if (gap) os << r.p_prev << ' ' << (r.n - r.p_prev) << ' ';
      if (gap)
        os << report::format_real(r.actual) << ' ';
      else
        os << static_cast<u64>(r.actual) << ' ';
      if (rep.claim.id == ClaimId::Trost || gap)
        os << report::format_real(r.bound) << '\n';
      else
        os << static_cast<u64>(r.bound) << '\n';
    }
  }
  os << "minimal_valid_n ";
  if (rep.minimal_valid_n)
    os << *rep.minimal_valid_n << '\n';
  else
    os << "none\n";
  os << "wall_time_ms " << rep.wall_time_ms << '\n';
  return os.str();
}

int emit_report(const VerificationReport& rep, const std::string& format,
                const std::optional<std::string>& out) {
  if (format == "json")
    emit(report::to_json(rep) + "\n", out);
  else if (format == "csv")
    emit(report::to_csv(rep), out);
  else
    emit(verify_table(rep), out);
  return rep.violations.empty() ? 0 : 1;
}

struct CommonArgs {
  std::optional<std::string> config;
  std::optional<u64> segment_size;
  std::optional<u64> chunk_size;
  std::optional<unsigned> parallelism;
  bool progress = false;

  Settings resolve() const {
    Settings s = load_settings(config);
    if (segment_size) {
      if (*segment_size < 64)
        throw std::invalid_argument("segment_size must be >= 64");
      s.segment_size = *segment_size;
    }
    if (chunk_size) {
      if (*chunk_size < 1)
        throw std::invalid_argument("chunk_size must be >= 1");
      s.verify_chunk = s.scan_chunk = *chunk_size;
    }
    if (parallelism) s.parallelism = *parallelism;
    if (s.parallelism == 0)
      s.parallelism = std::max(1u, std::thread::hardware_concurrency());
    s.progress = progress;
    return s;
  }
};

void add_common(CLI::App* sub, CommonArgs& c) {
  sub->add_option("--config", c.config, "key = value settings file");
  sub->add_option("--segment-size", c.segment_size,
                  "max candidates per sieve segment (env GAPLAB_SEGMENT_SIZE)");
  sub->add_option("--chunk-size", c.chunk_size,
                  "values per parallel work chunk");
  sub->add_option("--parallelism", c.parallelism,
                  "worker threads; 0 = hardware concurrency");
  sub->add_flag("--progress", c.progress, "progress notes on stderr");
}

void note(const Settings& s, const std::string& msg) {
  if (s.progress) std::cerr << msg << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "prime-gap bound and conjecture verification over exhaustive ranges"};
  app.require_subcommand(1);

  // count
  u64 count_a = 0, count_b = 0;
  CommonArgs count_common;
  auto* cmd_count =
      app.add_subcommand("count", "print the number of primes in (a, b)");
  cmd_count->add_option("a", count_a, "open lower end")->required();
  cmd_count->add_option("b", count_b, "open upper end")->required();
  add_common(cmd_count, count_common);

  // verify
  std::string verify_claim_text, verify_format = "table";
  u64 verify_from = 2, verify_to = 0;
  std::optional<double> verify_epsilon;
  std::optional<std::string> verify_out;
  bool no_gating = false, no_audit = false;
  CommonArgs verify_common;
  auto* cmd_verify = app.add_subcommand(
      "verify",
      "check a claim over [from, to]; exit 1 when violations are found");
  cmd_verify
      ->add_option("claim", verify_claim_text,
                   "trost|bertrand|cor2|prop1:k|prop2:k|prop3|gap:kind:bound")
      ->required();
  cmd_verify->add_option("--from", verify_from, "range start (default 2)");
  cmd_verify->add_option("--to", verify_to, "range end")->required();
  cmd_verify->add_option("--epsilon", verify_epsilon,
                         "epsilon for gap:ultra claims");
  cmd_verify->add_option("--format", verify_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd_verify->add_option("--out", verify_out, "write the report to a file");
  cmd_verify->add_flag("--no-premise-gating", no_gating,
                       "count conclusion failures below the premise too");
  cmd_verify->add_flag("--no-audit", no_audit,
                       "skip trial-division re-derivation of violations");
  add_common(cmd_verify, verify_common);

  // threshold
  u64 threshold_k = 0, threshold_limit = 0;
  std::string threshold_format = "table";
  std::optional<std::string> threshold_out;
  CommonArgs threshold_common;
  auto* cmd_threshold = app.add_subcommand(
      "threshold",
      "last gap with sqrt(p_next)-sqrt(p_prev) >= 1/k below a limit");
  cmd_threshold->add_option("k", threshold_k, "denominator k")->required();
  cmd_threshold->add_option("--limit", threshold_limit, "scan p_next <= limit")
      ->required();
  cmd_threshold->add_option("--format", threshold_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_threshold->add_option("--out", threshold_out, "write to a file");
  add_common(cmd_threshold, threshold_common);

  // merits
  std::string merits_kind, merits_format = "table";
  u64 merits_limit = 0, merits_top = 10;
  std::optional<double> merits_epsilon;
  std::optional<std::string> merits_out;
  CommonArgs merits_common;
  auto* cmd_merits = app.add_subcommand(
      "merits", "top gaps by merit plus the running record trace");
  cmd_merits->add_option("--kind", merits_kind, "sqrt|cramer|bhp|ultra")
      ->required()
      ->check(CLI::IsMember({"sqrt", "cramer", "bhp", "ultra"}));
  cmd_merits->add_option("--limit", merits_limit, "scan p_next <= limit")
      ->required();
  cmd_merits->add_option("--top", merits_top, "rows to keep (default 10)");
  cmd_merits->add_option(
      "--epsilon", merits_epsilon,
      "ultra epsilon; omitted: the configured set (default 0.1,0.25,0.5)");
  cmd_merits->add_option("--format", merits_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd_merits->add_option("--out", merits_out, "write to a file");
  add_common(cmd_merits, merits_common);

  // bounds
  u64 bounds_n = 0, bounds_k = 1;
  std::string bounds_format = "table";
  std::optional<std::string> bounds_out;
  CommonArgs bounds_common;
  auto* cmd_bounds =
      app.add_subcommand("bounds", "all six bound values at a given n");
  cmd_bounds->add_option("--n", bounds_n, "interval parameter n")->required();
  cmd_bounds->add_option("--k", bounds_k, "k for the prop1/prop2 bounds");
  cmd_bounds->add_option("--format", bounds_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_bounds->add_option("--out", bounds_out, "write to a file");
  add_common(cmd_bounds, bounds_common);

  // calibrate
  u64 calibrate_limit = 0;
  std::string calibrate_format = "table";
  std::optional<std::string> calibrate_out;
  CommonArgs calibrate_common;
  auto* cmd_calibrate = app.add_subcommand(
      "calibrate", "max gap / ln^2 p ratio and the smallest integer k above");
  cmd_calibrate
      ->add_option("--limit", calibrate_limit, "scan p_next <= limit")
      ->required();
  cmd_calibrate->add_option("--format", calibrate_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_calibrate->add_option("--out", calibrate_out, "write to a file");
  add_common(cmd_calibrate, calibrate_common);

  // bhp-scan
  u64 bhp_from = 3, bhp_to = 0;
  std::optional<u64> bhp_at;
  std::string bhp_format = "table";
  std::optional<std::string> bhp_out;
  CommonArgs bhp_common;
  auto* cmd_bhp = app.add_subcommand(
      "bhp-scan", "check [x - floor(x^0.525), x] for primes over a range");
  cmd_bhp->add_option("--from", bhp_from, "range start (default 3)");
  auto* bhp_to_opt = cmd_bhp->add_option("--to", bhp_to, "range end");
  auto* bhp_at_opt =
      cmd_bhp->add_option("--at", bhp_at, "check a single x instead");
  bhp_at_opt->excludes(bhp_to_opt);
  cmd_bhp->add_option("--format", bhp_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd_bhp->add_option("--out", bhp_out, "write to a file");
  add_common(cmd_bhp, bhp_common);

  // config-dump
  CommonArgs dump_common;
  auto* cmd_dump = app.add_subcommand(
      "config-dump", "print the resolved settings (flags > config > env)");
  add_common(cmd_dump, dump_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_count)) {
      Settings s = count_common.resolve();
      std::cout << count_primes_open(count_a, count_b, s.sieve()) << '\n';
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      Settings s = verify_common.resolve();
      Claim claim = Claim::parse(verify_claim_text, verify_epsilon);
      VerifyOptions vo = s.verify();
      vo.premise_gating = !no_gating;
      vo.self_audit = !no_audit;
      note(s, "verifying " + claim.label() + " over [" +
                  std::to_string(verify_from) + ", " +
                  std::to_string(verify_to) + "]");
      VerificationReport rep =
          verify_claim(claim, verify_from, verify_to, vo);
      note(s, "done: " + std::to_string(rep.violations.size()) +
                  " violation(s) in " + std::to_string(rep.wall_time_ms) +
                  " ms");
      return emit_report(rep, verify_format, verify_out);
    }

    if (app.got_subcommand(cmd_threshold)) {
      Settings s = threshold_common.resolve();
      note(s, "scanning thresholds for k=" + std::to_string(threshold_k));
      ThresholdResult res = find_threshold(threshold_k, threshold_limit,
                                           s.scan());
      if (threshold_format == "json") {
        emit(report::to_json(res) + "\n", threshold_out);
      } else {
        std::ostringstream os;
        os << "k " << res.k << '\n' << "last_violation ";
        if (res.last_violation)
          os << res.last_violation->p_prev << ' '
             << res.last_violation->p_next << '\n';
        else
          os << "none\n";
        os << "n_k " << res.n_k << '\n'
           << "scanned_up_to " << res.scanned_up_to << '\n';
        emit(os.str(), threshold_out);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_merits)) {
      Settings s = merits_common.resolve();
      if (merits_epsilon && !(*merits_epsilon > 0))
        throw std::invalid_argument("epsilon must be > 0");
      std::vector<MeritSpec> specs;
      MeritKind kind = parse_merit_kind(merits_kind);
      if (kind == MeritKind::Ultra && !merits_epsilon)
        for (double e : s.ultra_epsilons) specs.push_back({kind, e});
      else
        specs.push_back({kind, merits_epsilon.value_or(1.0)});
      std::vector<MeritScan> scans;
      for (const auto& spec : specs) {
        note(s, "scanning merits kind=" + merit_kind_token(spec));
        scans.push_back(scan_merits(merits_limit, spec,
                                    static_cast<size_t>(merits_top),
                                    s.scan()));
      }
      std::ostringstream os;
      if (merits_format == "json") {
        if (scans.size() == 1) {
          os << report::to_json(scans[0], specs[0], merits_limit) << '\n';
        } else {
          os << '[';
          for (size_t i = 0; i < scans.size(); ++i) {
            if (i) os << ',';
            os << report::to_json(scans[i], specs[i], merits_limit);
          }
          os << "]\n";
        }
      } else if (merits_format == "csv") {
        for (size_t i = 0; i < scans.size(); ++i)
          os << report::records_csv(scans[i].records, specs[i], i == 0);
      } else {
        for (size_t i = 0; i < scans.size(); ++i) {
          if (i) os << '\n';
          os << "kind " << merits_kind << '\n';
          if (specs[i].kind == MeritKind::Ultra)
            os << "epsilon " << report::format_real(specs[i].epsilon) << '\n';
          os << "limit " << merits_limit << '\n'
             << "# rank p_prev p_next gap value\n";
          for (size_t r = 0; r < scans[i].top.size(); ++r)
            os << "top " << r + 1 << ' ' << scans[i].top[r].gap.p_prev << ' '
               << scans[i].top[r].gap.p_next << ' '
               << scans[i].top[r].gap.gap() << ' '
               << report::format_real(scans[i].top[r].value) << '\n';
          for (const auto& r : scans[i].records)
            os << "record " << r.scanned_up_to << ' ' << r.gap.p_prev << ' '
               << r.gap.p_next << ' ' << r.gap.gap() << ' '
               << report::format_real(r.value) << '\n';
        }
      }
      emit(os.str(), merits_out);
      return 0;
    }

    if (app.got_subcommand(cmd_bounds)) {
      Settings s = bounds_common.resolve();
      (void)s;
      if (bounds_n < 2) throw std::invalid_argument("bounds: need n >= 2");
      if (bounds_k < 1) throw std::invalid_argument("bounds: need k >= 1");
      double tl = bounds::trost_lower(bounds_n);
      double tu = bounds::trost_upper(bounds_n);
      u64 b1 = bounds::bound_prop1(bounds_n, bounds_k);
      u64 bc = bounds::bound_cor2(bounds_n);
      u64 b2 = bounds::bound_prop2(bounds_n, bounds_k);
      u64 b3 = bounds::bound_prop3(bounds_n);
      std::ostringstream os;
      if (bounds_format == "json") {
        os << "{\"n\":" << bounds_n << ",\"k\":" << bounds_k
           << ",\"trost_lower\":" << report::format_real(tl)
           << ",\"trost_upper\":" << report::format_real(tu)
           << ",\"prop1\":" << b1 << ",\"cor2\":" << bc << ",\"prop2\":" << b2
           << ",\"prop3\":" << b3 << "}\n";
      } else {
        os << "n " << bounds_n << '\n'
           << "k " << bounds_k << '\n'
           << "trost_lower " << report::format_real(tl) << '\n'
           << "trost_upper " << report::format_real(tu) << '\n'
           << "prop1 " << b1 << '\n'
           << "cor2 " << bc << '\n'
           << "prop2 " << b2 << '\n'
           << "prop3 " << b3 << '\n';
      }
      emit(os.str(), bounds_out);
      return 0;
    }

    if (app.got_subcommand(cmd_calibrate)) {
      Settings s = calibrate_common.resolve();
      note(s, "calibrating up to " + std::to_string(calibrate_limit));
      CramerCalibration cal = calibrate_cramer(calibrate_limit, s.scan());
      std::ostringstream os;
      if (calibrate_format == "json") {
        os << report::to_json(cal, calibrate_limit) << '\n';
      } else {
        os << "limit " << calibrate_limit << '\n'
           << "max_ratio " << report::format_real(cal.max_ratio) << '\n'
           << "min_integer_k " << cal.min_integer_k << '\n'
           << "argmax " << cal.argmax.p_prev << ' ' << cal.argmax.p_next
           << '\n'
           << "scanned_up_to " << cal.scanned_up_to << '\n';
      }
      emit(os.str(), calibrate_out);
      return 0;
    }

    if (app.got_subcommand(cmd_bhp)) {
      Settings s = bhp_common.resolve();
      if (bhp_at) {
        u64 x = *bhp_at;
        bool holds = check_bhp_window(x);
        u64 w = bhp_window_width(x);
        std::ostringstream os;
        if (bhp_format == "json")
          os << "{\"x\":" << x << ",\"width\":" << w
             << ",\"window_lo\":" << x - w
             << ",\"holds\":" << (holds ? "true" : "false") << "}\n";
        else
          os << "x " << x << '\n'
             << "width " << w << '\n'
             << "window_lo " << x - w << '\n'
             << "holds " << (holds ? 1 : 0) << '\n';
        emit(os.str(), bhp_out);
        return holds ? 0 : 1;
      }
      if (bhp_to == 0)
        throw std::invalid_argument("bhp-scan: --to (or --at) is required");
      Claim claim;
      claim.id = ClaimId::BhpWindow;
      note(s, "scanning prime windows over [" + std::to_string(bhp_from) +
                  ", " + std::to_string(bhp_to) + "]");
      VerificationReport rep =
          verify_claim(claim, bhp_from, bhp_to, s.verify());
      return emit_report(rep, bhp_format, bhp_out);
    }

    if (app.got_subcommand(cmd_dump)) {
      Settings s = dump_common.resolve();
      std::cout << "segment_size " << s.segment_size << '\n'
                << "verify.chunk_size " << s.verify_chunk << '\n'
                << "scan.chunk_size " << s.scan_chunk << '\n'
                << "parallelism " << s.parallelism << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
