// Copyright 2026 The Lemma Forge Authors.
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

#include "lemma_forge/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "lemma_forge/scores.hpp"

namespace lemma_forge {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

// Parses a whole token as an unsigned decimal. Signs and trailing garbage
// are rejected.
template <typename T>
bool parse_unsigned(std::string_view token, T& value) {
  if (token.empty() || token.front() < '0' || token.front() > '9') {
    return false;
  }
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::string_view next_token(std::string_view& rest) {
  while (!rest.empty() && is_blank(rest.front())) rest.remove_prefix(1);
  std::size_t end = 0;
  while (end < rest.size() && !is_blank(rest[end])) ++end;
  std::string_view token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

bool contains(std::span<const LemmaIndex> values, LemmaIndex v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

TraceParseError::TraceParseError(Code code, std::size_t line,
                                 const std::string& what)
    : InputError(at_line(line, what)), code_(code), line_(line) {}

LemmaIndex ProofTrace::append(char kind, std::uint32_t size,
                              std::span<const LemmaIndex> deps) {
  if (kind < 'A' || kind > 'Z') {
    throw std::invalid_argument("lemma kind must be an uppercase letter");
  }
  if (size == 0) throw std::invalid_argument("lemma size must be positive");
  const auto index = static_cast<LemmaIndex>(kinds_.size() + 1);
  const std::size_t first = deps_.size();
  // Linear duplicate scan for the common short rows, hashing for long ones.
  std::unordered_set<LemmaIndex> seen_long;
  const bool long_row = deps.size() > 32;
  for (LemmaIndex dep : deps) {
    if (dep == 0 || dep >= index) {
      deps_.resize(first);
      throw std::invalid_argument("dependency " + std::to_string(dep) +
                                  " is not below lemma " +
                                  std::to_string(index));
    }
    const bool fresh =
        long_row ? seen_long.insert(dep).second
                 : !contains({deps_.data() + first, deps_.size() - first}, dep);
    if (fresh) deps_.push_back(dep);
  }
  kinds_.push_back(kind);
  sizes_.push_back(size);
  offsets_.push_back(deps_.size());
  return index;
}

LemmaNode ProofTrace::node(LemmaIndex i) const {
  auto d = deps(i);
  return LemmaNode{i, kind(i), symbol_size(i), {d.begin(), d.end()}};
}

ProofTrace ProofTrace::prefix(std::size_t count) const {
  count = std::min(count, size());
  ProofTrace out;
  out.kinds_.assign(kinds_.begin(), kinds_.begin() + count);
  out.sizes_.assign(sizes_.begin(), sizes_.begin() + count);
  out.offsets_.assign(offsets_.begin(), offsets_.begin() + count + 1);
  out.deps_.assign(deps_.begin(), deps_.begin() + offsets_[count]);
  return out;
}

void ProofTrace::reserve(std::size_t nodes, std::size_t edges) {
  kinds_.reserve(nodes);
  sizes_.reserve(nodes);
  offsets_.reserve(nodes + 1);
  deps_.reserve(edges);
}

ProofTrace parse_trace(std::istream& in, const ParseOptions& options) {
  using Code = TraceParseError::Code;
  ProofTrace trace;
  std::string line;
  std::vector<LemmaIndex> deps;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    if (auto hash = rest.find('#'); hash != std::string_view::npos) {
      rest = rest.substr(0, hash);
    }
    rest = trim(rest);
    if (rest.empty()) continue;

    const auto index = static_cast<LemmaIndex>(trace.size() + 1);
    std::string_view head = next_token(rest);
    const char kind = head.front();
    if (kind < 'A' || kind > 'Z') {
      throw TraceParseError(Code::kMalformed, line_no,
                            "expected an uppercase inference tag, got '" +
                                std::string(head) + "'");
    }
    std::uint32_t size = 0;
    if (!parse_unsigned(head.substr(1), size) || size == 0) {
      throw TraceParseError(Code::kMalformed, line_no,
                            "expected a positive size after tag in '" +
                                std::string(head) + "'");
    }
    deps.clear();
    for (auto token = next_token(rest); !token.empty();
         token = next_token(rest)) {
      LemmaIndex dep = 0;
      if (!parse_unsigned(token, dep)) {
        throw TraceParseError(Code::kMalformed, line_no,
                              "bad dependency '" + std::string(token) + "'");
      }
      if (dep == 0) {
        throw TraceParseError(Code::kZeroReference, line_no,
                              "dependency 0 is out of range");
      }
      if (dep >= index) {
        throw TraceParseError(Code::kForwardReference, line_no,
                              "dependency " + std::to_string(dep) +
                                  " >= lemma index " + std::to_string(index));
      }
      deps.push_back(dep);
    }
    trace.append(kind, size, deps);
    if (options.progress && options.progress_every != 0 &&
        trace.size() % options.progress_every == 0) {
      options.progress(trace.size());
    }
  }
  return trace;
}

ProofTrace parse_trace_string(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

void write_trace(const ProofTrace& trace, std::ostream& out) {
  std::string line;
  char buf[16];
  for (LemmaIndex i = 1; i <= trace.size(); ++i) {
    line.clear();
    line.push_back(trace.kind(i));
    auto res = std::to_chars(buf, buf + sizeof buf, trace.symbol_size(i));
    line.append(buf, res.ptr);
    for (LemmaIndex dep : trace.deps(i)) {
      line.push_back(' ');
      res = std::to_chars(buf, buf + sizeof buf, dep);
      line.append(buf, res.ptr);
    }
    line.push_back('\n');
    out << line;
  }
}

std::string write_trace_string(const ProofTrace& trace) {
  std::ostringstream out;
  write_trace(trace, out);
  return out.str();
}

NamedMap load_names(std::istream& in, const WarningSink& warn) {
  NamedMap names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty()) continue;
    std::string_view index_token = next_token(rest);
    std::string_view name = next_token(rest);
    LemmaIndex index = 0;
    if (!parse_unsigned(index_token, index) || index == 0) {
      throw InputError(at_line(line_no, "names file: bad lemma index '" +
                                            std::string(index_token) + "'"));
    }
    if (name.empty() || !trim(rest).empty()) {
      throw InputError(
          at_line(line_no, "names file: expected exactly one name token"));
    }
    auto [it, inserted] = names.try_emplace(index, name);
    if (!inserted) {
      if (warn) {
        warn(at_line(line_no, "lemma " + std::to_string(index) +
                                  " renamed from " + it->second + " to " +
                                  std::string(name)));
      }
      it->second = name;
    }
  }
  return names;
}

void write_names(const NamedMap& names, std::ostream& out) {
  for (const auto& [index, name] : names) out << index << ' ' << name << '\n';
}

NormalFormMap load_normal_forms(std::istream& in, const WarningSink& warn) {
  NormalFormMap forms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw InputError(
          at_line(line_no, "normal forms file: missing tab separator"));
    }
    LemmaIndex index = 0;
    if (!parse_unsigned(std::string_view(line).substr(0, tab), index) ||
        index == 0) {
      throw InputError(at_line(line_no, "normal forms file: bad lemma index"));
    }
    auto [it, inserted] = forms.try_emplace(index, line.substr(tab + 1));
    if (!inserted) {
      if (warn) {
        warn(at_line(line_no, "duplicate normal form for lemma " +
                                  std::to_string(index)));
      }
      it->second = line.substr(tab + 1);
    }
  }
  return forms;
}

std::vector<LemmaIndex> load_index_list(std::istream& in) {
  std::vector<LemmaIndex> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty()) continue;
    std::string_view token = next_token(rest);
    LemmaIndex index = 0;
    if (!parse_unsigned(token, index) || index == 0) {
      throw InputError(at_line(line_no, "bad lemma index '" +
                                            std::string(token) + "'"));
    }
    out.push_back(index);
  }
  return out;
}

void write_edge_list(const ProofTrace& trace, std::ostream& out) {
  for (LemmaIndex i = 1; i <= trace.size(); ++i) {
    for (LemmaIndex dep : trace.deps(i)) out << i << ' ' << dep << '\n';
  }
}

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", value);
  return buf;
}

void export_ranking(const ScoreVector& scores, const NamedMap& names,
                    std::size_t k, std::ostream& out) {
  const auto order = rank_order(scores, k);
  std::size_t rank = 0;
  for (LemmaIndex i : order) {
    auto it = names.find(i);
    out << ++rank << '\t' << i << '\t' << format_score(scores.at(i)) << '\t'
        << (it == names.end() ? std::string("-") : it->second) << '\n';
  }
}

}  // namespace lemma_forge
