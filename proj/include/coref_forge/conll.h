// Copyright 2026 The coref-forge Authors.
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

// Reader and writer for the CoNLL-2012 style column format.
//
//   #begin document (<id>); part <nnn>
//   <id> <part> <index-in-sentence> <word> [opaque columns...] <coref>
//   ...
//   <blank line between sentences>
//   #end document
//
// The coref column holds '-' or '|'-joined markers "(N", "N)" and "(N)".

#ifndef COREF_FORGE_CONLL_H_
#define COREF_FORGE_CONLL_H_

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coref_forge/document.h"
#include "coref_forge/error.h"
#include "coref_forge/text.h"

namespace coref_forge {

// Puts clusters in id order and mentions in (start, end) order. Parsing
// always yields canonical documents.
inline void Canonicalize(Document& doc) {
  SortMentions(doc);
  std::sort(doc.clusters.begin(), doc.clusters.end(),
            [](const Cluster& a, const Cluster& b) { return a.id < b.id; });
}

namespace internal {

constexpr size_t kMinConllColumns = 5;

struct OpenMarker {
  int64_t start;
  int line;
};

class ConllDocumentBuilder {
 public:
  ConllDocumentBuilder(std::string doc_id, int part, int begin_line)
      : begin_line_(begin_line) {
    doc_.doc_id = std::move(doc_id);
    doc_.part = part;
  }

  void AddToken(std::string_view line, int line_no) {
    const auto cols = SplitWhitespace(line);
    if (cols.size() < kMinConllColumns) {
      throw Error(ErrorCode::kBadColumnCount,
                  "line " + std::to_string(line_no) + ": expected at least " +
                      std::to_string(kMinConllColumns) + " columns, found " +
                      std::to_string(cols.size()));
    }
    if (column_count_ == 0) {
      column_count_ = cols.size();
    } else if (cols.size() != column_count_) {
      throw Error(ErrorCode::kBadColumnCount,
                  "line " + std::to_string(line_no) + ": found " +
                      std::to_string(cols.size()) + " columns, document uses " +
                      std::to_string(column_count_));
    }
    const int64_t index = doc_.token_count();
    Token token{std::string(cols[3]), index, {}};
    for (size_t i = 4; i + 1 < cols.size(); ++i) {
      token.extra.emplace_back(cols[i]);
    }
    doc_.tokens.push_back(std::move(token));
    ApplyMarkers(cols.back(), index, line_no);
  }

  void EndSentence(int line_no) {
    if (sentence_begin_ == doc_.token_count()) return;
    for (const auto& [id, stack] : open_) {
      if (!stack.empty()) {
        throw Error(ErrorCode::kUnbalancedBracket,
                    "line " + std::to_string(stack.back().line) +
                        ": marker '(" + std::to_string(id) +
                        "' is not closed before the sentence ends at line " +
                        std::to_string(line_no));
      }
    }
    doc_.sentences.push_back({sentence_begin_, doc_.token_count()});
    sentence_begin_ = doc_.token_count();
  }

  Document Finish(int line_no) {
    EndSentence(line_no);
    for (auto& [id, spans] : spans_) {
      doc_.clusters.push_back(Cluster{id, std::move(spans)});
    }
    Canonicalize(doc_);
    const auto violations = Validate(doc_);
    if (!violations.empty()) {
      throw Error(ErrorCode::kInvalidDocument,
                  "document '" + doc_.doc_id + "' starting at line " +
                      std::to_string(begin_line_) + ": " +
                      violations.front().ToString());
    }
    return std::move(doc_);
  }

 private:
  // Accepts '|'-joined ("(0|(1") and concatenated ("(0(1") marker runs.
  void ApplyMarkers(std::string_view column, int64_t index, int line_no) {
    if (column == "-") return;
    auto bad = [&] {
      return Error(ErrorCode::kBadCorefMarker,
                   "line " + std::to_string(line_no) + ": bad coref column '" +
                       std::string(column) + "'");
    };
    auto read_id = [&](size_t& i) {
      const size_t begin = i;
      while (i < column.size() && column[i] >= '0' && column[i] <= '9') ++i;
      int64_t id = 0;
      if (!ParseNonNegativeInt(column.substr(begin, i - begin), id)) throw bad();
      return id;
    };
    size_t i = 0;
    while (i < column.size()) {
      if (column[i] == '|') {
        ++i;
      } else if (column[i] == '(') {
        ++i;
        const int64_t id = read_id(i);
        if (i < column.size() && column[i] == ')') {
          ++i;
          spans_[id].push_back({index, index + 1});
        } else {
          open_[id].push_back({index, line_no});
        }
      } else {
        const int64_t id = read_id(i);
        if (i >= column.size() || column[i] != ')') throw bad();
        ++i;
        auto& stack = open_[id];
        if (stack.empty()) {
          throw Error(ErrorCode::kUnbalancedBracket,
                      "line " + std::to_string(line_no) + ": marker '" +
                          std::to_string(id) + ")' has no matching '(" +
                          std::to_string(id) + "'");
        }
        spans_[id].push_back({stack.back().start, index + 1});
        stack.pop_back();
      }
    }
  }

  Document doc_;
  int begin_line_;
  size_t column_count_ = 0;
  int64_t sentence_begin_ = 0;
  std::map<int64_t, std::vector<OpenMarker>> open_;
  std::map<int64_t, std::vector<MentionSpan>> spans_;
};

inline std::pair<std::string, int> ParseBeginLine(std::string_view line,
                                                  int line_no) {
  constexpr std::string_view kPrefix = "#begin document";
  std::string_view rest = Trim(line.substr(kPrefix.size()));
  std::string id;
  int part = 0;
  if (!rest.empty() && rest.front() == '(') {
    const auto close = rest.rfind(')');
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": unterminated doc id");
    }
    id = std::string(rest.substr(1, close - 1));
    rest = rest.substr(close + 1);
  } else {
    const auto semi = rest.find(';');
    id = std::string(Trim(rest.substr(0, semi)));
    rest = semi == std::string_view::npos ? std::string_view{}
                                          : rest.substr(semi);
  }
  const auto part_pos = rest.find("part");
  if (part_pos != std::string_view::npos) {
    int64_t value = 0;
    if (!ParseNonNegativeInt(Trim(rest.substr(part_pos + 4)), value)) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": bad part number");
    }
    part = static_cast<int>(value);
  }
  if (id.empty()) {
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line_no) + ": empty doc id");
  }
  return {id, part};
}

}  // namespace internal

inline Corpus ParseConll(std::string_view text) {
  Corpus corpus;
  std::unordered_set<std::string> ids;
  std::optional<internal::ConllDocumentBuilder> current;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = nl + 1;
    ++line_no;

    const std::string_view trimmed = Trim(line);
    if (trimmed.starts_with("#begin document")) {
      if (current) {
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": document begins before previous one ended");
      }
      auto [id, part] = internal::ParseBeginLine(trimmed, line_no);
      if (!ids.insert(id).second) {
        throw Error(ErrorCode::kDuplicateDocId,
                    "line " + std::to_string(line_no) + ": '" + id + "'");
      }
      current.emplace(std::move(id), part, line_no);
    } else if (trimmed.starts_with("#end document")) {
      if (!current) {
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": #end document without #begin document");
      }
      corpus.documents.push_back(current->Finish(line_no));
      current.reset();
    } else if (trimmed.empty()) {
      if (current) current->EndSentence(line_no);
    } else if (trimmed.front() == '#') {
      continue;
    } else {
      if (!current) {
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": token line outside a document");
      }
      current->AddToken(trimmed, line_no);
    }
  }
  if (current) {
    throw Error(ErrorCode::kMalformedInput,
                "end of input inside a document (missing #end document)");
  }
  return corpus;
}

namespace internal {

inline std::string CorefColumn(const std::vector<std::tuple<int, int64_t,
                                                            int64_t>>& marks) {
  // marks: (kind, sort key, id) with kind 0 = close, 1 = open, 2 = singleton.
  if (marks.empty()) return "-";
  std::string out;
  for (const auto& [kind, key, id] : marks) {
    if (!out.empty()) out += '|';
    const std::string n = std::to_string(id);
    if (kind == 0) out += n + ")";
    if (kind == 1) out += "(" + n;
    if (kind == 2) out += "(" + n + ")";
  }
  return out;
}

}  // namespace internal

// Writes a valid corpus. Markers on one token are ordered closes (innermost
// first), then opens (outermost first), then single-token mentions, so that
// nested spans of one cluster read back unchanged.
inline std::string SerializeConll(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    const int64_t n = doc.token_count();
    std::vector<std::vector<std::tuple<int, int64_t, int64_t>>> marks(n);
    for (const auto& c : doc.clusters) {
      for (const auto& m : c.mentions) {
        if (m.size() == 1) {
          marks[m.start].emplace_back(2, 0, c.id);
        } else {
          marks[m.start].emplace_back(1, -m.end, c.id);
          marks[m.end - 1].emplace_back(0, -m.start, c.id);
        }
      }
    }
    for (auto& v : marks) std::sort(v.begin(), v.end());

    char part[32];
    std::snprintf(part, sizeof(part), "%03d", doc.part);
    out += "#begin document (" + doc.doc_id + "); part " + part + "\n";
    const std::string part_col = std::to_string(doc.part);
    for (const auto& sent : doc.sentences) {
      for (int64_t i = sent.begin; i < sent.end; ++i) {
        const Token& t = doc.tokens[i];
        out += doc.doc_id;
        out += '\t';
        out += part_col;
        out += '\t';
        out += std::to_string(i - sent.begin);
        out += '\t';
        out += t.text;
        for (const auto& col : t.extra) {
          out += '\t';
          out += col;
        }
        out += '\t';
        out += internal::CorefColumn(marks[i]);
        out += '\n';
      }
      out += '\n';
    }
    out += "#end document\n";
  }
  return out;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_CONLL_H_
