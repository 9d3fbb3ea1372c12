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

#include "relsim/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "relsim/errors.hpp"

namespace relsim {
namespace {

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad number '" + std::string(text) + "' in sweep '" +
                     std::string(spec) + "'");
  }
  return v;
}

}  // namespace

ThresholdGrid ThresholdGrid::parse(std::string_view spec) {
  auto c1 = spec.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw InputError("sweep must be lo:hi:step, got '" + std::string(spec) +
                     "'");
  }
  ThresholdGrid grid;
  grid.lo = parse_number(spec.substr(0, c1), spec);
  grid.hi = parse_number(spec.substr(c1 + 1, c2 - c1 - 1), spec);
  grid.step = parse_number(spec.substr(c2 + 1), spec);
  if (!(grid.step > 0) || grid.hi < grid.lo) {
    throw InputError("sweep needs lo <= hi and step > 0, got '" +
                     std::string(spec) + "'");
  }
  return grid;
}

std::vector<double> ThresholdGrid::values() const {
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9;
    out.push_back(t == 0 ? 0.0 : t);
  }
  return out;
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.threshold) << ',' << format_double(r.precision) << ','
        << format_double(r.recall) << ',' << format_double(r.f) << ','
        << r.guesses << ',' << r.skipped << ',' << r.doubles << '\n';
  }
}

}  // namespace relsim
