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

#include "relsim/taxonomy.hpp"

#include <algorithm>
#include <array>

#include "relsim/errors.hpp"

namespace relsim {
namespace {

using G = RelationGroup;

constexpr std::array<RelationClass, 30> kClasses = {{
    {"cause", "cs", "flu virus", G::kCausality},
    {"effect", "eff", "exam anxiety", G::kCausality},
    {"purpose", "prp", "concert hall", G::kCausality},
    {"detraction", "detr", "headache pill", G::kCausality},
    {"frequency", "freq", "daily exercise", G::kTemporality},
    {"time at", "tat", "morning exercise", G::kTemporality},
    {"time through", "tthr", "six-hour meeting", G::kTemporality},
    {"direction", "dir", "outgoing mail", G::kSpatial},
    {"location", "loc", "home town", G::kSpatial},
    {"location at", "lat", "desert storm", G::kSpatial},
    {"location from", "lfr", "foreign capital", G::kSpatial},
    {"agent", "ag", "student protest", G::kParticipant},
    {"beneficiary", "ben", "student discount", G::kParticipant},
    {"instrument", "inst", "laser printer", G::kParticipant},
    {"object", "obj", "metal separator", G::kParticipant},
    {"object property", "obj_prop", "sunken ship", G::kParticipant},
    {"part", "part", "printer tray", G::kParticipant},
    {"possessor", "posr", "national debt", G::kParticipant},
    {"property", "prop", "blue book", G::kParticipant},
    {"product", "prod", "plum tree", G::kParticipant},
    {"source", "src", "olive oil", G::kParticipant},
    {"stative", "st", "sleeping dog", G::kParticipant},
    {"whole", "whl", "daisy chain", G::kParticipant},
    {"container", "cntr", "film music", G::kQuality},
    {"content", "cont", "apple cake", G::kQuality},
    {"equative", "eq", "player coach", G::kQuality},
    {"material", "mat", "brick house", G::kQuality},
    {"measure", "meas", "expensive book", G::kQuality},
    {"topic", "top", "weather report", G::kQuality},
    {"type", "type", "oak tree", G::kQuality},
}};

const RelationClass* find_class(std::string_view abbreviation) noexcept {
  auto it = std::find_if(kClasses.begin(), kClasses.end(), [&](const auto& c) {
    return c.abbreviation == abbreviation;
  });
  return it == kClasses.end() ? nullptr : &*it;
}

}  // namespace

Granularity parse_granularity(std::string_view text) {
  if (text == "30") return Granularity::kThirtyClass;
  if (text == "5") return Granularity::kFiveClass;
  throw InputError("class granularity must be 30 or 5, got '" +
                   std::string(text) + "'");
}

std::span<const RelationClass> relation_classes() noexcept { return kClasses; }

std::string_view group_name(RelationGroup group) noexcept {
  switch (group) {
    case G::kCausality:
      return "causality";
    case G::kTemporality:
      return "temporality";
    case G::kSpatial:
      return "spatial";
    case G::kParticipant:
      return "participant";
    case G::kQuality:
      return "quality";
  }
  return {};
}

bool is_relation_class(std::string_view abbreviation) noexcept {
  return find_class(abbreviation) != nullptr;
}

RelationGroup group_of(std::string_view abbreviation) {
  const RelationClass* c = find_class(abbreviation);
  if (c == nullptr) {
    throw InputError("unknown relation class '" + std::string(abbreviation) +
                     "'");
  }
  return c->group;
}

std::string collapse_label(std::string_view abbreviation,
                           Granularity granularity) {
  RelationGroup g = group_of(abbreviation);
  if (granularity == Granularity::kFiveClass) return std::string(group_name(g));
  return std::string(abbreviation);
}

std::vector<std::string> class_labels(Granularity granularity) {
  std::vector<std::string> labels;
  if (granularity == Granularity::kFiveClass) {
    for (auto g : {G::kCausality, G::kTemporality, G::kSpatial, G::kParticipant,
                   G::kQuality}) {
      labels.emplace_back(group_name(g));
    }
  } else {
    for (const auto& c : kClasses) labels.emplace_back(c.abbreviation);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace relsim
