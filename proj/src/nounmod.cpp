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

#include "relsim/nounmod.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "relsim/errors.hpp"
#include "relsim/metrics.hpp"

namespace relsim {
namespace {

// Guessed label ids, nearest first; empty on abstention.
std::vector<std::size_t> margin_decision(std::span<const double> cosines,
                                         std::span<const std::size_t> labels,
                                         double threshold, TieBreaker& ties) {
  TopTwo top = select_top_two(cosines, ties);
  const std::size_t first = labels[top.best];
  if (!top.second || labels[*top.second] == first) return {first};
  const double m = top.margin();
  if (threshold > m) return {};
  if (threshold < -m) return {first, labels[*top.second]};
  return {first};
}

// Interns labels so the decision works on ids.
struct LabelSpace {
  std::vector<std::string> names;

  std::size_t id(const std::string& label) {
    auto it = std::find(names.begin(), names.end(), label);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(label);
    return names.size() - 1;
  }
};

std::vector<double> cosines_to(std::span<const LabeledVector> train,
                               std::span<const double> probe) {
  std::vector<double> out;
  out.reserve(train.size());
  for (const auto& t : train) out.push_back(cosine(t.values, probe));
  return out;
}

}  // namespace

std::vector<LabeledNounModifier> read_labeled_pairs(std::istream& in) {
  std::vector<LabeledNounModifier> items;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream fs(line);
    for (std::string f; std::getline(fs, f, '\t');) fields.push_back(f);
    auto where = "noun-modifier file line " + std::to_string(lineno) + ": ";
    if (fields.size() < 3 || fields[0].empty() || fields[1].empty()) {
      throw InputError(where + "expected modifier, head and class");
    }
    if (!is_relation_class(fields[2])) {
      throw InputError(where + "unknown class abbreviation '" + fields[2] + "'");
    }
    auto lower = [](std::string s) {
      for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
      return s;
    };
    items.push_back({lower(fields[0]), lower(fields[1]), fields[2]});
  }
  return items;
}

std::vector<LabeledNounModifier> load_labeled_pairs(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  return read_labeled_pairs(in);
}

std::string classify_1nn(std::span<const LabeledVector> train,
                         std::span<const double> probe, TieBreaker& ties) {
  if (train.empty()) throw std::invalid_argument("classify_1nn: empty training set");
  auto cos = cosines_to(train, probe);
  return train[select_top_two(cos, ties).best].label;
}

std::vector<std::string> classify_margin(std::span<const LabeledVector> train,
                                         std::span<const double> probe,
                                         double threshold, TieBreaker& ties) {
  if (train.empty()) {
    throw std::invalid_argument("classify_margin: empty training set");
  }
  LabelSpace space;
  std::vector<std::size_t> ids;
  ids.reserve(train.size());
  for (const auto& t : train) ids.push_back(space.id(t.label));
  std::vector<std::string> out;
  for (auto id : margin_decision(cosines_to(train, probe), ids, threshold, ties)) {
    out.push_back(space.names[id]);
  }
  return out;
}

LoocvResult loocv(std::span<const LabeledVector> dataset,
                  const LoocvOptions& options) {
  const std::size_t n = dataset.size();
  if (n < 2) throw std::invalid_argument("loocv needs at least two items");

  const auto labels = class_labels(options.granularity);
  std::vector<std::size_t> truth(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto name = collapse_label(dataset[i].label, options.granularity);
    truth[i] = static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(), name) - labels.begin());
  }

  std::vector<std::vector<double>> cos(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cos[i][j] = cos[j][i] = cosine(dataset[i].values, dataset[j].values);
    }
  }

  LoocvResult result;
  result.items = n;
  std::vector<ClassMetrics> rows(labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) rows[c].label = labels[c];

  std::vector<std::size_t> train(n - 1);
  std::vector<double> train_cos(n - 1);
  std::vector<std::size_t> train_labels(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0, k = 0; j < n; ++j) {
      if (j == i) continue;
      train[k] = j;
      train_cos[k] = cos[i][j];
      train_labels[k] = truth[j];
      ++k;
    }
    if (options.on_fold) options.on_fold(i, train);

    TieBreaker ties(options.tie_break, ordinal_seed(options.seed, i));
    auto guesses =
        margin_decision(train_cos, train_labels, options.threshold, ties);

    const std::size_t c = truth[i];
    ++rows[c].size;
    result.guesses += guesses.size();
    if (guesses.size() > 1) ++result.doubles;
    if (guesses.empty()) {
      ++result.abstained;
      ++result.confusion[{labels[c], std::string(kAbstainLabel)}];
    }
    bool hit = std::find(guesses.begin(), guesses.end(), c) != guesses.end();
    if (hit) {
      ++rows[c].tp;
      ++result.correct;
    } else {
      ++rows[c].fn;
    }
    for (auto g : guesses) {
      ++result.confusion[{labels[c], labels[g]}];
      if (g != c) ++rows[g].fp;
    }
  }

  for (auto& r : rows) {
    r.precision = safe_ratio(static_cast<double>(r.tp),
                             static_cast<double>(r.tp + r.fp));
    r.recall = safe_ratio(static_cast<double>(r.tp),
                          static_cast<double>(r.tp + r.fn));
    r.f = f_measure(r.precision, r.recall);
  }
  result.per_class = std::move(rows);
  return result;
}

MacroAverage macroaverage(std::span<const ClassMetrics> per_class) {
  MacroAverage avg;
  if (per_class.empty()) return avg;
  for (const auto& c : per_class) {
    avg.precision += c.precision;
    avg.recall += c.recall;
    avg.f += c.f;
  }
  const auto n = static_cast<double>(per_class.size());
  avg.precision /= n;
  avg.recall /= n;
  avg.f /= n;
  return avg;
}

}  // namespace relsim
