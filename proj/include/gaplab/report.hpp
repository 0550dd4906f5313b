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

#pragma once

#include <string>
#include <vector>

#include "gaplab/gaps.hpp"
#include "gaplab/verify.hpp"

// Report emission. The JSON emitter is hand-rolled with a fixed key order
// and fixed number formatting, so equal reports serialize to equal bytes.
// Reals carry 17 significant digits and round-trip to the same double.

namespace gaplab::report {

std::string format_real(double v);

// {claim, params, range, rows_checked, violations, minimal_valid_n,
//  wall_time_ms}. with_wall_time=false pins the timing field to 0 for
// byte-comparable output.
std::string to_json(const VerificationReport& rep, bool with_wall_time = true);

// Header row plus one numeric row per violation. Count and window claims:
// n,actual,bound,holds. Gap claims: n,p_prev,gap,actual,bound,holds.
std::string to_csv(const VerificationReport& rep);

// Inverse of to_json (accepts any field order). throws
// std::invalid_argument on malformed input.
VerificationReport from_json(const std::string& json);

std::string to_json(const ThresholdResult& res);
std::string to_json(const CramerCalibration& cal, u64 limit);
std::string to_json(const MeritScan& scan, const MeritSpec& spec, u64 limit);

// merit_kind,p_prev,p_next,gap,value,scanned_up_to rows; the running-record
// trace of a merit scan. with_header=false appends to an existing table.
std::string records_csv(const std::vector<GapRecord>& records,
                        const MeritSpec& spec, bool with_header = true);

}  // namespace gaplab::report
