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

#include "relsim/vector_cache.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relsim {
namespace {

constexpr std::string_view kHeader = "# relsim vector cache v1";

std::string header_value(const std::string& line, std::string_view key) {
  std::string prefix = "# " + std::string(key) + " ";
  if (!line.starts_with(prefix)) {
    throw InputError("vector cache: expected '" + prefix + "...' header");
  }
  return line.substr(prefix.size());
}

}  // namespace

ProvenanceMismatch::ProvenanceMismatch(const std::string& field,
                                       const std::string& cached,
                                       const std::string& active)
    : InputError("vector cache " + field + " mismatch: cache has " + cached +
                 ", active configuration has " + active) {}

bool VectorCache::contains(const WordPair& pair) const {
  return entries_.contains(pair.key());
}

void VectorCache::put(const WordPair& pair, std::vector<std::uint64_t> raw) {
  if (raw.size() != kRelationVectorLength) {
    throw std::invalid_argument("vector cache entries need 128 counts");
  }
  entries_[pair.key()] = std::move(raw);
}

RelationVector VectorCache::vector(const WordPair& pair) const {
  auto it = entries_.find(pair.key());
  if (it == entries_.end()) {
    throw InputError("pair '" + pair.key() + "' is not in the vector cache");
  }
  return RelationVector::from_raw(pair, it->second);
}

void VectorCache::require_provenance(const CacheProvenance& active) const {
  auto check = [](const char* field, const std::string& cached,
                  const std::string& want) {
    if (!want.empty() && cached != want) {
      throw ProvenanceMismatch(field, cached, want);
    }
  };
  check("corpus", provenance_.corpus, active.corpus);
  check("terms", provenance_.terms, active.terms);
  check("mode", provenance_.mode, active.mode);
}

void VectorCache::write(std::ostream& out) const {
  out << kHeader << '\n'
      << "# corpus " << provenance_.corpus << '\n'
      << "# terms " << provenance_.terms << '\n'
      << "# mode " << provenance_.mode << '\n';
  for (const auto& [key, raw] : entries_) {
    out << key;
    for (auto c : raw) out << '\t' << c;
    out << '\n';
  }
}

VectorCache VectorCache::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw InputError("not a relsim vector cache");
  }
  CacheProvenance p;
  std::getline(in, line);
  p.corpus = header_value(line, "corpus");
  std::getline(in, line);
  p.terms = header_value(line, "terms");
  std::getline(in, line);
  p.mode = header_value(line, "mode");

  VectorCache cache(std::move(p));
  std::size_t lineno = 4;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto where = "vector cache line " + std::to_string(lineno) + ": ";
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError(where + "missing counts");
    WordPair pair;
    try {
      pair = WordPair::parse(line.substr(0, tab));
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    std::vector<std::uint64_t> raw;
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    while (true) {
      auto next = rest.find('\t');
      auto field = rest.substr(0, next);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw InputError(where + "bad count '" + std::string(field) + "'");
      }
      raw.push_back(v);
      if (next == std::string_view::npos) break;
      rest.remove_prefix(next + 1);
    }
    if (raw.size() != kRelationVectorLength) {
      throw InputError(where + "expected 128 counts, found " +
                       std::to_string(raw.size()));
    }
    cache.entries_[pair.key()] = std::move(raw);
  }
  return cache;
}

void VectorCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write(out);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

VectorCache VectorCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  return read(in);
}

}  // namespace relsim
