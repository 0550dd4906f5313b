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

#include "gaplab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gaplab::report {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string u(u64 v) { return std::to_string(v); }

bool is_gap_claim(const Claim& c) { return c.id == ClaimId::GapMerit; }

// Counts and integral bounds print as integers; merits as reals.
std::string actual_str(const Claim& c, double v) {
  return is_gap_claim(c) ? format_real(v) : u(static_cast<u64>(v));
}

std::string bound_str(const Claim& c, double v) {
  if (c.id == ClaimId::Trost || is_gap_claim(c)) return format_real(v);
  return u(static_cast<u64>(v));
}

std::string params_json(const Claim& c) {
  std::ostringstream os;
  os << '{';
  switch (c.id) {
    case ClaimId::Prop1:
      os << "\"k\":" << c.k;
      if (c.premise_n) os << ",\"n_k\":" << *c.premise_n;
      break;
    case ClaimId::Prop2:
      os << "\"k\":" << c.k;
      if (c.premise_n) os << ",\"n\":" << *c.premise_n;
      break;
    case ClaimId::Prop3:
      if (c.premise_n) os << "\"c\":" << *c.premise_n;
      break;
    case ClaimId::GapMerit:
      os << "\"kind\":\"" << (c.merit.kind == MeritKind::SqrtDiff ? "sqrt"
                              : c.merit.kind == MeritKind::Cramer ? "cramer"
                              : c.merit.kind == MeritKind::Bhp    ? "bhp"
                                                                  : "ultra")
         << '"';
      if (c.merit.kind == MeritKind::Ultra)
        os << ",\"epsilon\":" << format_real(c.merit.epsilon);
      os << ",\"bound\":" << format_real(c.gap_bound);
      break;
    default:
      break;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string to_json(const VerificationReport& rep, bool with_wall_time) {
  std::ostringstream os;
  os << "{\"claim\":\"" << rep.claim.label() << '"'
     << ",\"params\":" << params_json(rep.claim) << ",\"range\":["
     << u(rep.n_lo) << ',' << u(rep.n_hi) << ']'
     << ",\"rows_checked\":" << u(rep.rows_checked) << ",\"violations\":[";
  bool first = true;
  for (const auto& row : rep.violations) {
    if (!first) os << ',';
    first = false;
    os << "{\"n\":" << u(row.n);
    if (is_gap_claim(rep.claim))
      os << ",\"p_prev\":" << u(row.p_prev)
         << ",\"gap\":" << u(row.n - row.p_prev);
    os << ",\"actual\":" << actual_str(rep.claim, row.actual)
       << ",\"bound\":" << bound_str(rep.claim, row.bound)
       << ",\"holds\":" << (row.holds ? "true" : "false") << '}';
  }
  os << ']' << ",\"minimal_valid_n\":";
  if (rep.minimal_valid_n)
    os << u(*rep.minimal_valid_n);
  else
    os << "null";
  os << ",\"wall_time_ms\":" << u(with_wall_time ? rep.wall_time_ms : 0)
     << '}';
  return os.str();
}

std::string to_csv(const VerificationReport& rep) {
  std::ostringstream os;
  bool gap = is_gap_claim(rep.claim);
  os << (gap ? "n,p_prev,gap,actual,bound,holds\n"
             : "n,actual,bound,holds\n");
  for (const auto& row : rep.violations) {
    os << u(row.n) << ',';
    if (gap) os << u(row.p_prev) << ',' << u(row.n - row.p_prev) << ',';
    os << actual_str(rep.claim, row.actual) << ','
       << bound_str(rep.claim, row.bound) << ',' << (row.holds ? 1 : 0)
       << '\n';
  }
  return os.str();
}

VerificationReport from_json(const std::string& json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report parse: ") + e.what());
  }
  try {
    VerificationReport rep;
    std::string label = j.at("claim").get<std::string>();
    const auto& params = j.at("params");
    if (label == "gap") {
      std::string spec = "gap:" + params.at("kind").get<std::string>() + ":" +
                         format_real(params.at("bound").get<double>());
      std::optional<double> eps;
      if (params.contains("epsilon")) eps = params.at("epsilon").get<double>();
      rep.claim = Claim::parse(spec, eps);
    } else if (label == "bhp-window") {
      rep.claim.id = ClaimId::BhpWindow;
    } else {
      rep.claim = Claim::parse(label);
      if (params.contains("k")) rep.claim.k = params.at("k").get<u64>();
      for (const char* key : {"n_k", "n", "c"})
        if (params.contains(key))
          rep.claim.premise_n = params.at(key).get<u64>();
    }
    rep.n_lo = j.at("range").at(0).get<u64>();
    rep.n_hi = j.at("range").at(1).get<u64>();
    rep.rows_checked = j.at("rows_checked").get<u64>();
    for (const auto& row : j.at("violations")) {
      BoundCheckRow r;
      r.n = row.at("n").get<u64>();
      if (row.contains("p_prev")) r.p_prev = row.at("p_prev").get<u64>();
      r.actual = row.at("actual").get<double>();
      r.bound = row.at("bound").get<double>();
      r.holds = row.at("holds").get<bool>();
      rep.violations.push_back(r);
    }
    if (!j.at("minimal_valid_n").is_null())
      rep.minimal_valid_n = j.at("minimal_valid_n").get<u64>();
    rep.wall_time_ms = j.at("wall_time_ms").get<u64>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report parse: ") + e.what());
  }
}

std::string to_json(const ThresholdResult& res) {
  std::ostringstream os;
  os << "{\"k\":" << u(res.k) << ",\"last_violation\":";
  if (res.last_violation)
    os << "{\"p_prev\":" << u(res.last_violation->p_prev)
       << ",\"p_next\":" << u(res.last_violation->p_next)
       << ",\"gap\":" << u(res.last_violation->gap()) << '}';
  else
    os << "null";
  os << ",\"n_k\":" << u(res.n_k)
     << ",\"scanned_up_to\":" << u(res.scanned_up_to) << '}';
  return os.str();
}

std::string to_json(const CramerCalibration& cal, u64 limit) {
  std::ostringstream os;
  os << "{\"limit\":" << u(limit)
     << ",\"max_ratio\":" << format_real(cal.max_ratio)
     << ",\"min_integer_k\":" << u(cal.min_integer_k)
     << ",\"argmax\":{\"p_prev\":" << u(cal.argmax.p_prev)
     << ",\"p_next\":" << u(cal.argmax.p_next)
     << ",\"gap\":" << u(cal.argmax.gap()) << '}'
     << ",\"scanned_up_to\":" << u(cal.scanned_up_to) << '}';
  return os.str();
}

namespace {

void record_json(std::ostringstream& os, const GapRecord& r) {
  os << "{\"p_prev\":" << r.gap.p_prev << ",\"p_next\":" << r.gap.p_next
     << ",\"gap\":" << r.gap.gap() << ",\"value\":" << format_real(r.value)
     << ",\"scanned_up_to\":" << r.scanned_up_to << '}';
}

const char* kind_name(MeritKind k) {
  switch (k) {
    case MeritKind::SqrtDiff: return "sqrt";
    case MeritKind::Cramer: return "cramer";
    case MeritKind::Bhp: return "bhp";
    case MeritKind::Ultra: return "ultra";
  }
  return "?";
}

}  // namespace

std::string to_json(const MeritScan& scan, const MeritSpec& spec, u64 limit) {
  std::ostringstream os;
  os << "{\"kind\":\"" << kind_name(spec.kind) << '"';
  if (spec.kind == MeritKind::Ultra)
    os << ",\"epsilon\":" << format_real(spec.epsilon);
  os << ",\"limit\":" << u(limit) << ",\"top\":[";
  for (size_t i = 0; i < scan.top.size(); ++i) {
    if (i) os << ',';
    record_json(os, scan.top[i]);
  }
  os << "],\"records\":[";
  for (size_t i = 0; i < scan.records.size(); ++i) {
    if (i) os << ',';
    record_json(os, scan.records[i]);
  }
  os << "]}";
  return os.str();
}

std::string records_csv(const std::vector<GapRecord>& records,
                        const MeritSpec& spec, bool with_header) {
  std::ostringstream os;
  if (with_header) os << "merit_kind,p_prev,p_next,gap,value,scanned_up_to\n";
  std::string kind = merit_kind_token(spec);
  for (const auto& r : records)
    os << kind << ',' << r.gap.p_prev << ',' << r.gap.p_next << ','
       << r.gap.gap() << ',' << format_real(r.value) << ','
       << r.scanned_up_to << '\n';
  return os.str();
}

}  // namespace gaplab::report
