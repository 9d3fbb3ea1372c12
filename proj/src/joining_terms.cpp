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

#include "relsim/joining_terms.hpp"

#include <fstream>
#include <istream>

#include "relsim/checksum.hpp"
#include "relsim/errors.hpp"

namespace relsim {
namespace {

std::vector<std::string> standard_terms() {
  return {
      " ",           " * not ",      " * very ",  " after ",
      " and not ",   " are ",        " at ",      " at the ",
      " become* ",   " but not ",    " contain* ", " for ",
      " for example ", " for the ",  " from ",    " from the ",
      " get* ",      " give* ",      " go ",      " goes ",
      " has ",       " have ",       " in ",      " in the ",
      " instead of ", " into ",      " is ",      " is * ",
      " is the ",    " lack* ",      " like ",    " like * ",
      " like the ",  " make* ",      " need* ",   " not ",
      " not the ",   " of ",         " of the ",  " on ",
      " onto ",      " or ",         " rather than ", " such as ",
      " than ",      " that ",       " the ",     " their ",
      " then ",      " this ",       " to ",      " to the ",
      " turn* ",     " use* ",       " when ",    " which ",
      " will ",      " with ",       " with the ", " within ",
      " without ",   " yet ",        "s ",        "s * ",
  };
}

}  // namespace

JoiningTermTable::JoiningTermTable(std::vector<std::string> terms)
    : terms_(std::move(terms)) {
  std::string joined;
  for (const auto& t : terms_) {
    joined += t;
    joined.push_back('\n');
  }
  checksum_ = fnv1a64(joined);
}

const JoiningTermTable& JoiningTermTable::standard() {
  static const JoiningTermTable table(standard_terms());
  return table;
}

JoiningTermTable JoiningTermTable::from_terms(std::vector<std::string> terms) {
  if (terms.size() != kSize) {
    throw InputError("joining-term table needs exactly 64 terms, got " +
                     std::to_string(terms.size()));
  }
  return JoiningTermTable(std::move(terms));
}

JoiningTermTable JoiningTermTable::read(std::istream& in) {
  std::vector<std::string> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    if (line[first] != '"' || last == first || line[last] != '"') {
      throw InputError("joining-term line " + std::to_string(lineno) +
                       ": expected a double-quoted term");
    }
    terms.push_back(line.substr(first + 1, last - first - 1));
  }
  return from_terms(std::move(terms));
}

JoiningTermTable JoiningTermTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  return read(in);
}

}  // namespace relsim
