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

#include "relsim/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "relsim/tokenizer.hpp"

namespace fs = std::filesystem;

namespace relsim {
namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<Document> split_documents(std::string_view text) {
  std::vector<std::string_view> sections;
  std::size_t section_start = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::size_t line_end = eol == std::string_view::npos ? text.size() : eol;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == kDocumentSeparator) {
      sections.push_back(text.substr(section_start, line_start - section_start));
      section_start = eol == std::string_view::npos ? text.size() : eol + 1;
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  std::string_view tail = text.substr(section_start);
  if (!tail.empty() || sections.empty()) sections.push_back(tail);
  if (sections.size() == 1 && sections.front().empty()) sections.clear();

  std::vector<Document> docs;
  docs.reserve(sections.size());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    docs.push_back({static_cast<DocId>(i), tokenize(sections[i])});
  }
  return docs;
}

std::vector<Document> load_corpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path, ec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    if (ec) throw InputError("cannot list '" + path.string() + "'");
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
      return a.filename().string() < b.filename().string();
    });
    std::vector<Document> docs;
    docs.reserve(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
      docs.push_back({static_cast<DocId>(i), tokenize(read_file(files[i]))});
    }
    return docs;
  }
  if (!fs::is_regular_file(path, ec)) {
    throw InputError("corpus path '" + path.string() + "' is not readable");
  }
  return split_documents(read_file(path));
}

}  // namespace relsim
