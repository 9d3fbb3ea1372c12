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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relsim {

enum class RelationGroup { kCausality, kTemporality, kSpatial, kParticipant, kQuality };

struct RelationClass {
  std::string_view name;
  std::string_view abbreviation;
  std::string_view example;
  RelationGroup group;
};

/// Label space used for training and scoring.
enum class Granularity { kThirtyClass, kFiveClass };

/// Accepts "30" and "5"; throws InputError otherwise.
Granularity parse_granularity(std::string_view text);

/// The 30 noun-modifier relations, grouped causality, temporality, spatial,
/// participant, quality.
std::span<const RelationClass> relation_classes() noexcept;

std::string_view group_name(RelationGroup group) noexcept;

bool is_relation_class(std::string_view abbreviation) noexcept;

/// Throws InputError for an unknown abbreviation.
RelationGroup group_of(std::string_view abbreviation);

/// The abbreviation itself at 30 classes, its group name at 5 classes.
std::string collapse_label(std::string_view abbreviation, Granularity granularity);

/// Every label of the granularity, sorted alphabetically.
std::vector<std::string> class_labels(Granularity granularity);

}  // namespace relsim
