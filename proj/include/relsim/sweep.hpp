// Copyright 2026 The relsim Authors.
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relsim {

/// Evenly spaced thresholds lo, lo+step, ..., hi (inclusive).
struct ThresholdGrid {
  double lo = -0.11;
  double hi = 0.11;
  double step = 0.01;

  /// Parses "lo:hi:step". Throws InputError on a malformed or empty grid.
  static ThresholdGrid parse(std::string_view spec);

  /// Values are rounded to 1e-9 so that e.g. -0.11 + 11*0.01 prints as 0.
  std::vector<double> values() const;
};

struct SweepRow {
  double threshold = 0;
  double precision = 0;
  double recall = 0;
  double f = 0;
  std::size_t guesses = 0;
  std::size_t skipped = 0;
  std::size_t doubles = 0;
};

inline constexpr std::string_view kSweepCsvHeader =
    "threshold,precision,recall,f,guesses,skipped,doubles";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace relsim
