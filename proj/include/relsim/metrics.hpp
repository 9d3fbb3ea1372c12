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

namespace relsim {

/// num / den, with 0 whenever the denominator is 0.
inline double safe_ratio(double num, double den) noexcept {
  return den == 0 ? 0.0 : num / den;
}

/// Harmonic mean of precision and recall; 0 when both are 0.
inline double f_measure(double precision, double recall) noexcept {
  return safe_ratio(2 * precision * recall, precision + recall);
}

}  // namespace relsim
