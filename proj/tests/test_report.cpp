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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gaplab/report.hpp"
#include "gaplab/verify.hpp"

using namespace gaplab;
using report::format_real;
using report::from_json;
using report::to_csv;
using report::to_json;

namespace {

VerificationReport bertrand_report() {
  VerificationReport rep;
  rep.claim = Claim::parse("bertrand");
  rep.n_lo = 2;
  rep.n_hi = 100;
  rep.rows_checked = 99;
  rep.violations = {{2, 0, 0.0, 2.0, false}, {4, 0, 1.0, 2.0, false}};
  rep.minimal_valid_n = 8;
  rep.wall_time_ms = 7;
  return rep;
}

VerificationReport gap_report() {
  VerificationReport rep;
  rep.claim = Claim::parse("gap:sqrt:0.5");
  rep.n_lo = 2;
  rep.n_hi = 1000000;
  rep.rows_checked = 78497;
  rep.violations = {{127, 113, 0.6392818568499955, 0.5, false}};
  rep.wall_time_ms = 41;
  return rep;  // minimal_valid_n deliberately absent
}

bool same_claim(const Claim& a, const Claim& b) {
  return a.id == b.id && a.k == b.k && a.premise_n == b.premise_n &&
         a.merit.kind == b.merit.kind && a.merit.epsilon == b.merit.epsilon &&
         a.gap_bound == b.gap_bound;
}

bool same_report(const VerificationReport& a, const VerificationReport& b) {
  return same_claim(a.claim, b.claim) && a.n_lo == b.n_lo &&
         a.n_hi == b.n_hi && a.rows_checked == b.rows_checked &&
         a.violations == b.violations &&
         a.minimal_valid_n == b.minimal_valid_n &&
         a.wall_time_ms == b.wall_time_ms;
}

}  // namespace

TEST_CASE("format_real: shortest %.17g forms") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-2.5) == "-2.5");
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_real(0.82853544969022297) == "0.82853544969022297");
  CHECK(format_real(1e21) == "1e+21");
}

TEST_CASE("count report serializes with integer fields") {
  const char* want =
      "{\"claim\":\"bertrand\",\"params\":{},\"range\":[2,100],"
      "\"rows_checked\":99,\"violations\":["
      "{\"n\":2,\"actual\":0,\"bound\":2,\"holds\":false},"
      "{\"n\":4,\"actual\":1,\"bound\":2,\"holds\":false}],"
      "\"minimal_valid_n\":8,\"wall_time_ms\":7}";
  CHECK(to_json(bertrand_report()) == want);

  const char* normalized =
      "{\"claim\":\"bertrand\",\"params\":{},\"range\":[2,100],"
      "\"rows_checked\":99,\"violations\":["
      "{\"n\":2,\"actual\":0,\"bound\":2,\"holds\":false},"
      "{\"n\":4,\"actual\":1,\"bound\":2,\"holds\":false}],"
      "\"minimal_valid_n\":8,\"wall_time_ms\":0}";
  CHECK(to_json(bertrand_report(), /*with_wall_time=*/false) == normalized);

  CHECK(to_csv(bertrand_report()) ==
        "n,actual,bound,holds\n"
        "2,0,2,0\n"
        "4,1,2,0\n");
}

TEST_CASE("gap report serializes merits as reals, null minimal_valid_n") {
  const char* want =
      "{\"claim\":\"gap\",\"params\":{\"kind\":\"sqrt\",\"bound\":0.5},"
      "\"range\":[2,1000000],\"rows_checked\":78497,\"violations\":["
      "{\"n\":127,\"p_prev\":113,\"gap\":14,"
      "\"actual\":0.6392818568499955,\"bound\":0.5,\"holds\":false}],"
      "\"minimal_valid_n\":null,\"wall_time_ms\":41}";
  CHECK(to_json(gap_report()) == want);

  CHECK(to_csv(gap_report()) ==
        "n,p_prev,gap,actual,bound,holds\n"
        "127,113,14,0.6392818568499955,0.5,0\n");
}

TEST_CASE("trost reports keep real-valued bounds in rows") {
  VerificationReport rep;
  rep.claim = Claim::parse("trost");
  rep.n_lo = 2;
  rep.n_hi = 10;
  rep.rows_checked = 9;
  rep.violations = {{10, 0, 1.0, 1.1126940023177803, false}};
  rep.minimal_valid_n = 11;
  rep.wall_time_ms = 0;
  const char* want =
      "{\"claim\":\"trost\",\"params\":{},\"range\":[2,10],"
      "\"rows_checked\":9,\"violations\":["
      "{\"n\":10,\"actual\":1,\"bound\":1.1126940023177803,"
      "\"holds\":false}],\"minimal_valid_n\":11,\"wall_time_ms\":0}";
  CHECK(to_json(rep) == want);
  CHECK(to_csv(rep) ==
        "n,actual,bound,holds\n"
        "10,1,1.1126940023177803,0\n");
}

TEST_CASE("claim parameters appear under their documented keys") {
  VerificationReport rep;
  rep.claim = Claim::parse("prop1:4");
  rep.claim.premise_n = 3001;
  rep.n_lo = 2;
  rep.n_hi = 10;
  CHECK(to_json(rep).find("\"params\":{\"k\":4,\"n_k\":3001}") !=
        std::string::npos);

  rep.claim = Claim::parse("prop2:2");
  rep.claim.premise_n = 2;
  CHECK(to_json(rep).find("\"params\":{\"k\":2,\"n\":2}") !=
        std::string::npos);

  rep.claim = Claim::parse("prop3");
  rep.claim.premise_n = 0;
  CHECK(to_json(rep).find("\"params\":{\"c\":0}") != std::string::npos);

  rep.claim = Claim::parse("prop3");
  CHECK(to_json(rep).find("\"params\":{}") != std::string::npos);

  rep.claim = Claim::parse("gap:ultra:1.5", 0.25);
  CHECK(to_json(rep).find(
            "\"params\":{\"kind\":\"ultra\",\"epsilon\":0.25,\"bound\":1.5}") !=
        std::string::npos);
}

TEST_CASE("from_json inverts to_json field for field") {
  for (VerificationReport rep : {bertrand_report(), gap_report()})
    CHECK(same_report(from_json(to_json(rep)), rep));

  VerificationReport rep;
  rep.claim = Claim::parse("prop1:4");
  rep.claim.premise_n = 3001;
  rep.n_lo = 2;
  rep.n_hi = 10000;
  rep.rows_checked = 9999;
  rep.minimal_valid_n = 2;
  CHECK(same_report(from_json(to_json(rep)), rep));

  rep = VerificationReport{};
  rep.claim.id = ClaimId::BhpWindow;
  rep.n_lo = 3;
  rep.n_hi = 10000;
  rep.rows_checked = 9998;
  rep.violations = {{126, 0, 0.0, 1.0, false}};
  rep.minimal_valid_n = 127;
  CHECK(same_report(from_json(to_json(rep)), rep));

  rep = VerificationReport{};
  rep.claim = Claim::parse("gap:ultra:1.25", 0.3);
  rep.n_lo = 2;
  rep.n_hi = 50;
  CHECK(same_report(from_json(to_json(rep)), rep));

  // Serialized form is a fixed point.
  std::string s = to_json(gap_report());
  CHECK(to_json(from_json(s)) == s);
}

TEST_CASE("from_json rejects junk") {
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("{\"claim\":\"bertrand\"}"),
                  std::invalid_argument);
}

TEST_CASE("threshold results serialize with an explicit null") {
  ThresholdResult res;
  res.k = 2;
  res.last_violation = PrimeGap{113, 127};
  res.n_k = 131;
  res.scanned_up_to = 1000000;
  CHECK(to_json(res) ==
        "{\"k\":2,\"last_violation\":{\"p_prev\":113,\"p_next\":127,"
        "\"gap\":14},\"n_k\":131,\"scanned_up_to\":1000000}");

  ThresholdResult none;
  none.k = 1;
  none.n_k = 2;
  none.scanned_up_to = 1000000;
  CHECK(to_json(none) ==
        "{\"k\":1,\"last_violation\":null,\"n_k\":2,"
        "\"scanned_up_to\":1000000}");
}

TEST_CASE("calibration serializes the frozen ratio") {
  CramerCalibration cal;
  cal.max_ratio = 0.82853544969022297;
  cal.min_integer_k = 1;
  cal.argmax = {2, 3};
  cal.scanned_up_to = 100000;
  CHECK(to_json(cal, 100000) ==
        "{\"limit\":100000,\"max_ratio\":0.82853544969022297,"
        "\"min_integer_k\":1,\"argmax\":{\"p_prev\":2,\"p_next\":3,"
        "\"gap\":1},\"scanned_up_to\":100000}");
}

TEST_CASE("merit scans serialize records and top rows") {
  MeritScan scan;
  scan.records = {{{2, 3}, 0.31783724519578221, 3},
                  {{3, 5}, 0.50401716993091239, 5}};
  scan.top = {{{3, 5}, 0.50401716993091239, 10}};
  CHECK(to_json(scan, {MeritKind::SqrtDiff}, 10) ==
        "{\"kind\":\"sqrt\",\"limit\":10,\"top\":["
        "{\"p_prev\":3,\"p_next\":5,\"gap\":2,"
        "\"value\":0.50401716993091239,\"scanned_up_to\":10}],"
        "\"records\":["
        "{\"p_prev\":2,\"p_next\":3,\"gap\":1,"
        "\"value\":0.31783724519578221,\"scanned_up_to\":3},"
        "{\"p_prev\":3,\"p_next\":5,\"gap\":2,"
        "\"value\":0.50401716993091239,\"scanned_up_to\":5}]}");

  CHECK(to_json(scan, {MeritKind::Ultra, 0.25}, 10)
            .find("{\"kind\":\"ultra\",\"epsilon\":0.25,\"limit\":10") == 0);

  CHECK(report::records_csv(scan.records, {MeritKind::SqrtDiff}) ==
        "merit_kind,p_prev,p_next,gap,value,scanned_up_to\n"
        "sqrt,2,3,1,0.31783724519578221,3\n"
        "sqrt,3,5,2,0.50401716993091239,5\n");
  CHECK(report::records_csv(scan.top, {MeritKind::Ultra, 0.25},
                            /*with_header=*/false) ==
        "ultra:0.25,3,5,2,0.50401716993091239,10\n");
}

TEST_CASE("serialization of a real verification run round-trips") {
  VerificationReport rep = verify_claim(Claim::parse("bertrand"), 2, 100);
  std::string s = to_json(rep, /*with_wall_time=*/false);
  VerificationReport back = from_json(s);
  CHECK(to_json(back, false) == s);
  CHECK(back.violations == rep.violations);
}
