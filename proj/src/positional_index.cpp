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

#include "relsim/positional_index.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>

namespace relsim {
namespace {

constexpr std::array<char, 8> kMagic = {'R', 'S', 'I', 'D', 'X', '0', '0', '1'};

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

void write_u64(std::ostream& out, std::uint64_t v) {
  write_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  write_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t read_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) {
    throw InputError("index file is truncated");
  }
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  std::uint64_t lo = read_u32(in);
  std::uint64_t hi = read_u32(in);
  return lo | (hi << 32);
}

bool valid_token(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

// Start positions (doc, pos - offset) of the pattern at `offset`.
std::vector<Posting> shifted_starts(const PositionalIndex& index,
                                    const TokenPattern& pattern,
                                    std::uint32_t offset) {
  std::vector<Posting> out;
  if (pattern.kind() == PatternKind::kLiteral) {
    auto list = index.postings(pattern.prefix());
    out.reserve(list.size());
    for (const auto& p : list) {
      if (p.position >= offset) out.push_back({p.doc, p.position - offset});
    }
    return out;
  }
  out = index.expand(pattern);
  std::erase_if(out, [offset](const Posting& p) { return p.position < offset; });
  for (auto& p : out) p.position -= offset;
  return out;
}

}  // namespace

std::string_view to_string(HitMode mode) noexcept {
  return mode == HitMode::kDocumentHits ? "document" : "occurrence";
}

HitMode parse_hit_mode(std::string_view name) {
  if (name == "document") return HitMode::kDocumentHits;
  if (name == "occurrence") return HitMode::kOccurrences;
  throw InputError("unknown hit mode '" + std::string(name) +
                   "' (expected document|occurrence)");
}

DuplicateDocumentError::DuplicateDocumentError(DocId id)
    : InputError("duplicate document id " + std::to_string(id)), id_(id) {}

std::uint64_t PositionalIndex::token_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& d : docs_) total += d.length;
  return total;
}

std::span<const Posting> PositionalIndex::postings(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return {};
  return postings_[static_cast<std::size_t>(it - terms_.begin())];
}

std::vector<Posting> PositionalIndex::expand(const TokenPattern& pattern) const {
  std::vector<Posting> out;
  switch (pattern.kind()) {
    case PatternKind::kAnyWord:
      return out;
    case PatternKind::kLiteral: {
      auto list = postings(pattern.prefix());
      return {list.begin(), list.end()};
    }
    case PatternKind::kSubstringWildcard:
      break;
  }
  const std::string& prefix = pattern.prefix();
  std::size_t matched_terms = 0;
  for (auto it = std::lower_bound(terms_.begin(), terms_.end(), prefix);
       it != terms_.end() && it->starts_with(prefix); ++it) {
    if (!pattern.matches(*it)) continue;
    const auto& list = postings_[static_cast<std::size_t>(it - terms_.begin())];
    out.insert(out.end(), list.begin(), list.end());
    ++matched_terms;
  }
  if (matched_terms > 1) std::sort(out.begin(), out.end());
  return out;
}

void PositionalIndex::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  write_u64(out, docs_.size());
  for (const auto& d : docs_) {
    write_u32(out, d.id);
    write_u32(out, d.length);
  }
  write_u64(out, terms_.size());
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    write_u32(out, static_cast<std::uint32_t>(terms_[t].size()));
    out.write(terms_[t].data(), static_cast<std::streamsize>(terms_[t].size()));
    write_u64(out, postings_[t].size());
    for (const auto& p : postings_[t]) {
      write_u32(out, p.doc);
      write_u32(out, p.position);
    }
  }
  if (!out) throw std::runtime_error("failed writing index");
}

PositionalIndex PositionalIndex::load(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw InputError("not a relsim index file");
  }
  PositionalIndex index;
  std::uint64_t ndocs = read_u64(in);
  std::map<DocId, std::uint32_t> lengths;
  for (std::uint64_t i = 0; i < ndocs; ++i) {
    DocInfo d;
    d.id = read_u32(in);
    d.length = read_u32(in);
    if (!index.docs_.empty() && index.docs_.back().id >= d.id) {
      throw InputError("index file: documents out of order");
    }
    index.docs_.push_back(d);
    lengths[d.id] = d.length;
  }
  std::uint64_t nterms = read_u64(in);
  for (std::uint64_t t = 0; t < nterms; ++t) {
    std::uint32_t len = read_u32(in);
    std::string term(len, '\0');
    if (!in.read(term.data(), len) || !valid_token(term)) {
      throw InputError("index file: bad term entry");
    }
    if (!index.terms_.empty() && index.terms_.back() >= term) {
      throw InputError("index file: terms out of order");
    }
    std::uint64_t n = read_u64(in);
    std::vector<Posting> list;
    list.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
    for (std::uint64_t i = 0; i < n; ++i) {
      Posting p;
      p.doc = read_u32(in);
      p.position = read_u32(in);
      auto len_it = lengths.find(p.doc);
      if (len_it == lengths.end() || p.position >= len_it->second ||
          (!list.empty() && !(list.back() < p))) {
        throw InputError("index file: bad posting for '" + term + "'");
      }
      list.push_back(p);
    }
    index.terms_.push_back(std::move(term));
    index.postings_.push_back(std::move(list));
  }
  return index;
}

PositionalIndex build_index(std::span<const Document> docs) {
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return docs[a].id < docs[b].id;
  });

  PositionalIndex index;
  std::map<std::string, std::vector<Posting>, std::less<>> vocab;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Document& doc = docs[order[k]];
    if (k > 0 && docs[order[k - 1]].id == doc.id) {
      throw DuplicateDocumentError(doc.id);
    }
    index.docs_.push_back(
        {doc.id, static_cast<std::uint32_t>(doc.tokens.size())});
    for (std::size_t pos = 0; pos < doc.tokens.size(); ++pos) {
      const std::string& token = doc.tokens[pos];
      if (!valid_token(token)) {
        throw InputError("document " + std::to_string(doc.id) +
                         " has invalid token '" + token + "'");
      }
      auto it = vocab.find(token);
      if (it == vocab.end()) it = vocab.emplace(token, std::vector<Posting>{}).first;
      it->second.push_back({doc.id, static_cast<std::uint32_t>(pos)});
    }
  }
  index.terms_.reserve(vocab.size());
  index.postings_.reserve(vocab.size());
  for (auto& [term, list] : vocab) {
    index.terms_.push_back(term);
    index.postings_.push_back(std::move(list));
  }
  return index;
}

HitCount count_hits(const PositionalIndex& index, const PhraseQuery& query,
                    HitMode mode) {
  HitCount result{0, mode};
  if (query.patterns.empty()) return result;

  // Candidate start positions per concrete pattern; intersect smallest first.
  std::vector<std::vector<Posting>> lists;
  for (std::size_t i = 0; i < query.patterns.size(); ++i) {
    const auto& pattern = query.patterns[i];
    if (pattern.kind() == PatternKind::kAnyWord) continue;
    lists.push_back(
        shifted_starts(index, pattern, static_cast<std::uint32_t>(i)));
    if (lists.back().empty()) return result;
  }
  std::sort(lists.begin(), lists.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Posting> starts = std::move(lists.front());
  std::vector<Posting> scratch;
  for (std::size_t k = 1; k < lists.size() && !starts.empty(); ++k) {
    scratch.clear();
    std::set_intersection(starts.begin(), starts.end(), lists[k].begin(),
                          lists[k].end(), std::back_inserter(scratch));
    starts.swap(scratch);
  }
  // The last pattern is concrete, so every surviving start ends inside its
  // document; no separate boundary check is needed.

  if (mode == HitMode::kOccurrences) {
    result.count = starts.size();
  } else {
    std::uint64_t docs = 0;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      if (i == 0 || starts[i].doc != starts[i - 1].doc) ++docs;
    }
    result.count = docs;
  }
  return result;
}

}  // namespace relsim
