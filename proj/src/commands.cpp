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

#include "relsim/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "relsim/analogy.hpp"
#include "relsim/checksum.hpp"
#include "relsim/corpus.hpp"
#include "relsim/errors.hpp"
#include "relsim/nounmod.hpp"
#include "relsim/vector_cache.hpp"

namespace relsim::cli {
namespace {

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string percent(double fraction) {
  return fmt::format("{:.1f}%", 100.0 * fraction);
}

const JoiningTermTable& active_terms(const std::optional<fs::path>& path,
                                     std::optional<JoiningTermTable>& storage) {
  if (!path) return JoiningTermTable::standard();
  storage = JoiningTermTable::load(*path);
  return *storage;
}

VectorCache load_cache_for(const fs::path& path,
                           const std::optional<fs::path>& terms_path) {
  std::optional<JoiningTermTable> storage;
  const auto& terms = active_terms(terms_path, storage);
  auto cache = VectorCache::load(path);
  cache.require_provenance({"", to_hex(terms.checksum()), ""});
  return cache;
}

void require_pairs(const VectorCache& cache, const std::vector<WordPair>& pairs) {
  std::vector<std::string> missing;
  std::set<std::string> seen;
  for (const auto& p : pairs) {
    if (!cache.contains(p) && seen.insert(p.key()).second) {
      missing.push_back(p.key());
    }
  }
  if (missing.empty()) return;
  std::string list;
  for (const auto& m : missing) list += "\n  " + m;
  throw InputError(fmt::format("{} pair(s) missing from the vector cache:{}",
                               missing.size(), list));
}

void write_csv(const std::optional<fs::path>& csv,
               const std::vector<SweepRow>& rows, std::ostream& out) {
  if (!csv) {
    write_sweep_csv(out, rows);
    return;
  }
  std::ofstream file(*csv, std::ios::binary);
  if (!file) throw InputError("cannot write '" + csv->string() + "'");
  write_sweep_csv(file, rows);
}

std::vector<WordPair> question_pairs(const std::vector<AnalogyQuestion>& qs) {
  std::vector<WordPair> pairs;
  for (const auto& q : qs) {
    pairs.push_back(q.stem);
    pairs.insert(pairs.end(), q.choices.begin(), q.choices.end());
  }
  return pairs;
}

PairFormat sniff_format(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' ||
        line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    auto tabs = std::count(line.begin(), line.end(), '\t');
    bool colon = line.find(':') != std::string::npos;
    if (tabs == 0 && colon) return PairFormat::kPairs;
    if (tabs >= 3 && colon) return PairFormat::kSat;
    if (tabs >= 2 && !colon) return PairFormat::kNounmod;
    break;
  }
  throw InputError("cannot tell the format of '" + path.string() +
                   "'; pass --format");
}

}  // namespace

IndexSummary index_build(const fs::path& corpus, const fs::path& output,
                         std::ostream& out, std::ostream& err) {
  auto docs = load_corpus(corpus);
  if (docs.empty()) {
    fmt::print(err, "warning: corpus '{}' has no documents\n", corpus.string());
  }
  auto index = build_index(docs);
  std::ostringstream bytes;
  index.save(bytes);
  {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + output.string() + "'");
    file << bytes.str();
  }
  IndexSummary s{index.doc_count(), index.token_count(), index.vocabulary_size(),
                 to_hex(fnv1a64(bytes.str()))};
  fmt::print(out, "documents   {}\ntokens      {}\nvocabulary  {}\nfingerprint {}\n",
             s.docs, s.tokens, s.vocabulary, s.fingerprint);
  return s;
}

LoadedIndex load_index_file(const fs::path& path) {
  std::string bytes = read_bytes(path);
  std::istringstream in(bytes);
  return {PositionalIndex::load(in), to_hex(fnv1a64(bytes))};
}

PairFormat parse_pair_format(const std::string& name) {
  if (name == "auto") return PairFormat::kAuto;
  if (name == "sat") return PairFormat::kSat;
  if (name == "nounmod") return PairFormat::kNounmod;
  if (name == "pairs") return PairFormat::kPairs;
  throw InputError("unknown pair-file format '" + name +
                   "' (expected auto|sat|nounmod|pairs)");
}

std::vector<WordPair> read_pair_file(const fs::path& path, PairFormat format) {
  if (format == PairFormat::kAuto) format = sniff_format(path);
  std::vector<WordPair> all;
  switch (format) {
    case PairFormat::kSat:
      all = question_pairs(load_questions(path));
      break;
    case PairFormat::kNounmod:
      for (const auto& item : load_labeled_pairs(path)) all.push_back(item.pair());
      break;
    case PairFormat::kPairs: {
      std::ifstream in(path);
      if (!in) throw InputError("cannot read '" + path.string() + "'");
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
          all.push_back(WordPair::parse(line));
        } catch (const InputError& e) {
          throw InputError("pair file line " + std::to_string(lineno) + ": " +
                           e.what());
        }
      }
      break;
    }
    case PairFormat::kAuto:
      break;
  }
  std::vector<WordPair> distinct;
  std::set<std::string> seen;
  for (auto& p : all) {
    if (seen.insert(p.key()).second) distinct.push_back(std::move(p));
  }
  return distinct;
}

VectorsSummary vectors(const VectorsOptions& options, std::ostream& out) {
  std::optional<JoiningTermTable> storage;
  const auto& terms = active_terms(options.terms, storage);
  auto pairs = read_pair_file(options.pairs, options.format);
  auto loaded = load_index_file(options.index);
  CacheProvenance active{loaded.fingerprint, to_hex(terms.checksum()),
                         std::string(to_string(options.mode))};

  std::error_code ec;
  VectorCache cache = fs::exists(options.cache, ec)
                          ? VectorCache::load(options.cache)
                          : VectorCache(active);
  cache.require_provenance(active);

  std::vector<WordPair> todo;
  for (const auto& p : pairs) {
    if (!cache.contains(p)) todo.push_back(p);
  }

  IndexHitProvider provider(loaded.index, options.mode);
  std::vector<std::vector<std::uint64_t>> results(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
      try {
        results[i] = build_vector(provider, todo[i], terms).raw;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(todo.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    cache.put(todo[i], std::move(results[i]));
  }
  cache.save(options.cache);

  VectorsSummary s{pairs.size(), todo.size(), pairs.size() - todo.size()};
  fmt::print(out, "pairs     {}\ncomputed  {}\nreused    {}\ncache     {} entries\n",
             s.pairs, s.computed, s.reused, cache.size());
  return s;
}

void sat_solve(const SatOptions& options, std::ostream& out) {
  auto questions = load_questions(options.questions);
  auto cache = load_cache_for(options.cache, options.terms);
  require_pairs(cache, question_pairs(questions));

  std::vector<ScoredQuestion> scored;
  scored.reserve(questions.size());
  for (const auto& q : questions) {
    std::vector<RelationVector> choices;
    for (const auto& c : q.choices) choices.push_back(cache.vector(c));
    scored.push_back(score_question(cache.vector(q.stem), choices, q.answer));
  }

  if (options.sweep) {
    auto thresholds = options.sweep->values();
    auto rows =
        sweep_analogies(scored, thresholds, options.tie_break, options.seed);
    write_csv(options.csv, rows, out);
    if (options.csv) {
      fmt::print(out, "wrote {} sweep rows to {}\n", rows.size(),
                 options.csv->string());
    }
    return;
  }

  auto outcomes =
      decide_all(scored, options.threshold, options.tie_break, options.seed);
  auto r = evaluate(questions, outcomes);
  const double n = static_cast<double>(r.total);
  auto frac = [n](std::size_t k) { return n == 0 ? 0.0 : static_cast<double>(k) / n; };
  fmt::print(out, "threshold   {}\n", format_double(options.threshold));
  fmt::print(out, "questions   {}\n", r.total);
  fmt::print(out, "correct     {:>5}  {:>6}\n", r.correct, percent(frac(r.correct)));
  fmt::print(out, "incorrect   {:>5}  {:>6}\n", r.incorrect, percent(frac(r.incorrect)));
  fmt::print(out, "skipped     {:>5}  {:>6}\n", r.skipped, percent(frac(r.skipped)));
  fmt::print(out, "  zero stem {:>5}\n", r.zero_stem);
  fmt::print(out, "doubles     {:>5}\n", r.doubles);
  fmt::print(out, "precision   {} / {}  {}\n", r.correct, r.guesses_made,
             percent(r.precision));
  fmt::print(out, "recall      {} / {}  {}\n", r.correct, r.total, percent(r.recall));
  fmt::print(out, "f           {}\n", percent(r.f));
  fmt::print(out, "raw score   {}\n",
             format_double(raw_sat_score(r.correct, r.incorrect)));
  if (options.csv) {
    write_csv(options.csv, {to_sweep_row(options.threshold, r)}, out);
  }
}

void sat_rank(const SatRankOptions& options, std::ostream& out) {
  auto questions = load_questions(options.questions);
  auto cache = load_cache_for(options.cache, options.terms);
  std::vector<WordPair> needed;
  for (const auto& q : questions) {
    needed.push_back(q.stem);
    needed.push_back(q.choices[q.answer]);
  }
  require_pairs(cache, needed);

  std::vector<RelationVector> stems;
  std::vector<RelationVector> pool;
  for (const auto& q : questions) {
    auto stem = cache.vector(q.stem);
    if (stem.is_zero()) continue;
    stems.push_back(std::move(stem));
    pool.push_back(cache.vector(q.choices[q.answer]));
  }
  std::vector<std::size_t> ranks;
  ranks.reserve(stems.size());
  for (std::size_t i = 0; i < stems.size(); ++i) {
    ranks.push_back(rank_pool(stems[i], pool).rank_of(i));
  }

  fmt::print(out, "stems {}  pool {}  dropped {} zero stem(s)\n", stems.size(),
             pool.size(), questions.size() - stems.size());
  fmt::print(out, "{:>4}  {:>9}  {:>9}  {:>12}  {:>12}\n", "rank", "matches",
             "matches%", "cumulative", "cumulative%");
  for (const auto& row : cumulative_top_k(ranks, options.top)) {
    fmt::print(out, "{:>4}  {:>9}  {:>9}  {:>12}  {:>12}\n", row.rank,
               row.matches, percent(row.match_fraction), row.cumulative,
               percent(row.cumulative_fraction));
  }
}

void nounmod_eval(const NounmodOptions& options, std::ostream& out) {
  auto items = load_labeled_pairs(options.data);
  auto cache = load_cache_for(options.cache, options.terms);
  std::vector<WordPair> pairs;
  for (const auto& item : items) pairs.push_back(item.pair());
  require_pairs(cache, pairs);
  if (items.size() < 2) throw InputError("need at least two labeled pairs");

  std::vector<LabeledVector> dataset;
  dataset.reserve(items.size());
  for (const auto& item : items) {
    dataset.push_back({item.label, cache.vector(item.pair()).values});
  }

  LoocvOptions loo;
  loo.granularity = options.granularity;
  loo.tie_break = options.tie_break;
  loo.seed = options.seed;

  if (options.sweep) {
    std::vector<SweepRow> rows;
    for (double t : options.sweep->values()) {
      loo.threshold = t;
      auto r = loocv(dataset, loo);
      auto avg = macroaverage(r.per_class);
      rows.push_back({t, avg.precision, avg.recall, avg.f, r.guesses,
                      r.abstained, r.doubles});
    }
    write_csv(options.csv, rows, out);
    if (options.csv) {
      fmt::print(out, "wrote {} sweep rows to {}\n", rows.size(),
                 options.csv->string());
    }
    return;
  }

  loo.threshold = options.threshold;
  auto r = loocv(dataset, loo);
  auto avg = macroaverage(r.per_class);
  const double n = static_cast<double>(r.items);
  fmt::print(out, "{:<12}  {:>5}  {:>7}  {:>9}  {:>6}  {:>6}\n", "class", "size",
             "percent", "precision", "recall", "f");
  for (const auto& c : r.per_class) {
    fmt::print(out, "{:<12}  {:>5}  {:>7}  {:>9}  {:>6}  {:>6}\n", c.label, c.size,
               percent(static_cast<double>(c.size) / n), percent(c.precision),
               percent(c.recall), percent(c.f));
  }
  fmt::print(out, "{:<12}  {:>5}  {:>7}  {:>9}  {:>6}  {:>6}\n", "average", r.items,
             "", percent(avg.precision), percent(avg.recall), percent(avg.f));
  fmt::print(out, "accuracy    {} / {}  {}\n", r.correct, r.items,
             percent(static_cast<double>(r.correct) / n));
  fmt::print(out, "threshold {}  guesses {}  abstained {}  doubles {}\n",
             format_double(options.threshold), r.guesses, r.abstained, r.doubles);
  if (options.csv) {
    write_csv(options.csv,
              {{options.threshold, avg.precision, avg.recall, avg.f, r.guesses,
                r.abstained, r.doubles}},
              out);
  }
}

}  // namespace relsim::cli
