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

// Reading and writing proof traces and their side files.
//
// A trace is a line-oriented record of kernel inferences. Line i (1-based,
// blank lines not counted) describes lemma i:
//
//   C17 4 1   # Application(4,1)
//
// i.e. a one-letter inference tag glued to the symbol size of the derived
// statement, followed by the indices of the lemmas it was inferred from.
// Everything from '#' to the end of a line is ignored.

#ifndef LEMMA_FORGE_TRACE_IO_HPP_
#define LEMMA_FORGE_TRACE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lemma_forge {

// 1-based position of a lemma in its trace. 0 never names a lemma.
using LemmaIndex = std::uint32_t;

// Owning, value-typed view of one trace line.
struct LemmaNode {
  LemmaIndex index = 0;
  char kind = '?';
  std::uint32_t size = 1;
  std::vector<LemmaIndex> deps;

  friend bool operator==(const LemmaNode&, const LemmaNode&) = default;
};

// Thrown for any input that does not follow one of the file grammars.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TraceParseError : public InputError {
 public:
  enum class Code {
    kMalformed,         // missing tag, bad size or dependency token
    kForwardReference,  // dependency >= own index
    kZeroReference,     // dependency 0
  };

  TraceParseError(Code code, std::size_t line, const std::string& what);

  Code code() const { return code_; }
  // 1-based physical line number in the input.
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

// Ordered sequence of lemmas stored as compressed rows: one kind and size per
// lemma, plus a flat dependency array sliced by offsets.
class ProofTrace {
 public:
  ProofTrace() = default;

  // Appends lemma size()+1. Duplicate deps are dropped, first occurrence
  // wins. Throws std::invalid_argument when a dep is 0 or not below the new
  // index, when size is 0 or when kind is not an uppercase ASCII letter.
  LemmaIndex append(char kind, std::uint32_t size,
                    std::span<const LemmaIndex> deps);

  std::size_t size() const { return kinds_.size(); }
  bool empty() const { return kinds_.empty(); }
  std::size_t edge_count() const { return deps_.size(); }

  char kind(LemmaIndex i) const { return kinds_[i - 1]; }
  std::uint32_t symbol_size(LemmaIndex i) const { return sizes_[i - 1]; }
  std::span<const LemmaIndex> deps(LemmaIndex i) const {
    return {deps_.data() + offsets_[i - 1], deps_.data() + offsets_[i]};
  }
  LemmaNode node(LemmaIndex i) const;

  // The first `count` lemmas.
  ProofTrace prefix(std::size_t count) const;

  void reserve(std::size_t nodes, std::size_t edges);

  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;

 private:
  std::vector<char> kinds_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<LemmaIndex> deps_;
};

// Lemma index -> human name. Ordered so that files and rankings come out
// deterministic.
using NamedMap = std::map<LemmaIndex, std::string>;

// Lemma index -> variable-normalized statement.
using NormalFormMap = std::unordered_map<LemmaIndex, std::string>;

// Receives non-fatal diagnostics. May be empty.
using WarningSink = std::function<void(const std::string&)>;

struct ParseOptions {
  // Called with the number of lemmas read so far every `progress_every`
  // lemmas.
  std::function<void(std::size_t)> progress;
  std::size_t progress_every = 1'000'000;
};

ProofTrace parse_trace(std::istream& in, const ParseOptions& options = {});
ProofTrace parse_trace_string(const std::string& text);
void write_trace(const ProofTrace& trace, std::ostream& out);
std::string write_trace_string(const ProofTrace& trace);

// "INDEX NAME" per line. A repeated index overrides the earlier entry.
NamedMap load_names(std::istream& in, const WarningSink& warn = {});
void write_names(const NamedMap& names, std::ostream& out);

// "INDEX<TAB>STRING" per line. A repeated index overrides the earlier entry.
NormalFormMap load_normal_forms(std::istream& in, const WarningSink& warn = {});

// Reads the leading integer of every non-blank line. Accepts plain index
// lists as well as names files.
std::vector<LemmaIndex> load_index_list(std::istream& in);

// "I J" per edge, meaning J is a direct dependency of I.
void write_edge_list(const ProofTrace& trace, std::ostream& out);

// Formats a score with 12 significant digits, trailing zeros kept.
std::string format_score(double value);

struct ScoreVector;

// Top-k lemmas as "RANK<TAB>INDEX<TAB>SCORE<TAB>NAME" lines, '-' standing in
// for missing names. k is clamped to the number of lemmas.
void export_ranking(const ScoreVector& scores, const NamedMap& names,
                    std::size_t k, std::ostream& out);

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_TRACE_IO_HPP_
