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

// relsim: relational similarity over a local phrase index.
//
//   relsim index build --corpus DIR_OR_FILE --output corpus.idx
//   relsim vectors --pairs questions.tsv --index corpus.idx --cache vectors.tsv
//   relsim sat solve --questions questions.tsv --cache vectors.tsv [--sweep -0.11:0.11:0.01]
//   relsim sat rank --questions questions.tsv --cache vectors.tsv --top 10
//   relsim nounmod eval --data pairs.tsv --cache vectors.tsv --classes 5
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "relsim/commands.hpp"
#include "relsim/errors.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct SharedEvalFlags {
  std::string cache;
  std::string terms;
  double threshold = 0;
  std::string sweep;
  std::string csv;
  std::uint64_t seed = 0;
  std::string tie_break = "random";

  void add_to(CLI::App* app) {
    app->add_option("--cache", cache, "Vector cache written by 'vectors'")
        ->required();
    app->add_option("--terms", terms, "Joining-term table (default: built-in)");
    app->add_option("--threshold", threshold, "Margin threshold")
        ->default_val(0.0);
    app->add_option("--sweep", sweep, "Threshold sweep lo:hi:step (CSV output)");
    app->add_option("--csv", csv, "Write CSV here instead of stdout");
    app->add_option("--seed", seed, "Seed for tie-breaking")->default_val(0);
    app->add_option("--tie-break", tie_break, "random|first")
        ->default_val("random");
  }
};

std::optional<std::filesystem::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = relsim::cli;

  CLI::App app{"Relational similarity: phrase index, relation vectors, "
               "analogy solving and noun-modifier classification"};
  app.require_subcommand(1);

  auto* index_cmd = app.add_subcommand("index", "Corpus index commands");
  index_cmd->require_subcommand(1);
  auto* index_build = index_cmd->add_subcommand("build", "Build a positional index");
  std::string corpus, index_out;
  index_build->add_option("--corpus", corpus, "Directory or %%-separated file")
      ->required();
  index_build->add_option("--output", index_out, "Index file to write")->required();

  auto* vectors_cmd = app.add_subcommand("vectors", "Compute and cache relation vectors");
  std::string pairs, pairs_format = "auto", index_in, cache_out, terms_in,
                     mode = "document";
  unsigned threads = 0;
  vectors_cmd->add_option("--pairs", pairs, "Question, noun-modifier or x:y list file")
      ->required();
  vectors_cmd->add_option("--format", pairs_format, "auto|sat|nounmod|pairs")
      ->default_val("auto");
  vectors_cmd->add_option("--index", index_in, "Index file")->required();
  vectors_cmd->add_option("--cache", cache_out, "Vector cache (read and updated)")
      ->required();
  vectors_cmd->add_option("--terms", terms_in, "Joining-term table (default: built-in)");
  vectors_cmd->add_option("--mode", mode, "Hit semantics: document|occurrence")
      ->default_val("document");
  vectors_cmd->add_option("--threads", threads, "Worker threads (0: all cores)")
      ->default_val(0);

  auto* sat_cmd = app.add_subcommand("sat", "Analogy questions");
  sat_cmd->require_subcommand(1);
  auto* sat_solve = sat_cmd->add_subcommand("solve", "Answer questions by cosine margin");
  std::string questions;
  SharedEvalFlags sat_flags;
  sat_solve->add_option("--questions", questions, "Question TSV")->required();
  sat_flags.add_to(sat_solve);

  auto* sat_rank = sat_cmd->add_subcommand(
      "rank", "Rank every correct pair against every stem (top-k report)");
  std::string rank_questions, rank_cache, rank_terms;
  std::size_t top = 10;
  sat_rank->add_option("--questions", rank_questions, "Question TSV")->required();
  sat_rank->add_option("--cache", rank_cache, "Vector cache")->required();
  sat_rank->add_option("--terms", rank_terms, "Joining-term table");
  sat_rank->add_option("--top", top, "Deepest rank reported")->default_val(10);

  auto* nounmod_cmd = app.add_subcommand("nounmod", "Noun-modifier relations");
  nounmod_cmd->require_subcommand(1);
  auto* nounmod_eval =
      nounmod_cmd->add_subcommand("eval", "Leave-one-out nearest-neighbour evaluation");
  std::string data, classes = "30";
  SharedEvalFlags nm_flags;
  nounmod_eval->add_option("--data", data, "Labeled pair TSV")->required();
  nounmod_eval->add_option("--classes", classes, "30 or 5")->default_val("30");
  nm_flags.add_to(nounmod_eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*index_build) {
      cli::index_build(corpus, index_out, std::cout, std::cerr);
    } else if (*vectors_cmd) {
      cli::VectorsOptions o;
      o.pairs = pairs;
      o.format = cli::parse_pair_format(pairs_format);
      o.index = index_in;
      o.cache = cache_out;
      o.terms = optional_path(terms_in);
      o.mode = relsim::parse_hit_mode(mode);
      o.threads = threads;
      cli::vectors(o, std::cout);
    } else if (*sat_solve) {
      cli::SatOptions o;
      o.questions = questions;
      o.cache = sat_flags.cache;
      o.terms = optional_path(sat_flags.terms);
      o.threshold = sat_flags.threshold;
      if (!sat_flags.sweep.empty()) {
        o.sweep = relsim::ThresholdGrid::parse(sat_flags.sweep);
      }
      o.csv = optional_path(sat_flags.csv);
      o.seed = sat_flags.seed;
      o.tie_break = relsim::parse_tie_break(sat_flags.tie_break);
      cli::sat_solve(o, std::cout);
    } else if (*sat_rank) {
      cli::SatRankOptions o;
      o.questions = rank_questions;
      o.cache = rank_cache;
      o.terms = optional_path(rank_terms);
      o.top = top;
      cli::sat_rank(o, std::cout);
    } else if (*nounmod_eval) {
      cli::NounmodOptions o;
      o.data = data;
      o.cache = nm_flags.cache;
      o.terms = optional_path(nm_flags.terms);
      o.granularity = relsim::parse_granularity(classes);
      o.threshold = nm_flags.threshold;
      if (!nm_flags.sweep.empty()) {
        o.sweep = relsim::ThresholdGrid::parse(nm_flags.sweep);
      }
      o.csv = optional_path(nm_flags.csv);
      o.seed = nm_flags.seed;
      o.tie_break = relsim::parse_tie_break(nm_flags.tie_break);
      cli::nounmod_eval(o, std::cout);
    }
  } catch (const relsim::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return 0;
}
