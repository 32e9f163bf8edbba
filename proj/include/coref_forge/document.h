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

// Document model with structural validation and corpus statistics.

#ifndef COREF_FORGE_DOCUMENT_H_
#define COREF_FORGE_DOCUMENT_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "coref_forge/text.h"

namespace coref_forge {

struct Token {
  std::string text;
  // Document-level ordinal.
  int64_t index = 0;
  // Columns between the token text and the coref column, carried verbatim.
  std::vector<std::string> extra;

  bool operator==(const Token&) const = default;
};

// Half-open token range [start, end) in document coordinates.
struct MentionSpan {
  int64_t start = 0;
  int64_t end = 0;

  int64_t size() const { return end - start; }
  bool Contains(const MentionSpan& o) const {
    return start <= o.start && o.end <= end;
  }
  auto operator<=>(const MentionSpan&) const = default;
};

struct Cluster {
  int64_t id = 0;
  // Sorted by (start, end), no duplicates.
  std::vector<MentionSpan> mentions;

  bool operator==(const Cluster&) const = default;
};

struct SentenceRange {
  int64_t begin = 0;
  int64_t end = 0;

  bool operator==(const SentenceRange&) const = default;
};

struct Document {
  std::string doc_id;
  int part = 0;
  std::vector<SentenceRange> sentences;
  std::vector<Token> tokens;
  std::vector<Cluster> clusters;

  int64_t token_count() const { return static_cast<int64_t>(tokens.size()); }

  std::vector<std::string> TokenTexts() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
  }

  const Cluster* FindCluster(int64_t id) const {
    for (const auto& c : clusters) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;

  const Document* Find(std::string_view doc_id) const {
    for (const auto& d : documents) {
      if (d.doc_id == doc_id) return &d;
    }
    return nullptr;
  }

  bool operator==(const Corpus&) const = default;
};

// Builds a document from per-sentence token strings. Token indices and
// sentence ranges are filled in; clusters are left empty.
inline Document MakeDocument(std::string doc_id,
                             const std::vector<std::vector<std::string>>& sents) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  for (const auto& sent : sents) {
    SentenceRange range{doc.token_count(), doc.token_count()};
    for (const auto& text : sent) {
      doc.tokens.push_back(Token{text, doc.token_count(), {}});
    }
    range.end = doc.token_count();
    doc.sentences.push_back(range);
  }
  return doc;
}

// Sorts mentions inside each cluster so the (start, end) invariant holds.
inline void SortMentions(Document& doc) {
  for (auto& c : doc.clusters) {
    std::sort(c.mentions.begin(), c.mentions.end());
  }
}

enum class ViolationKind {
  kBadTokenText,
  kBadTokenIndex,
  kSentencePartition,
  kEmptyCluster,
  kSpanOutOfRange,
  kCrossSentenceSpan,
  kUnsortedMentions,
  kDuplicateSpanInCluster,
  kCrossingMentionsInCluster,
  kSpanInMultipleClusters,
  kDuplicateClusterId,
  kDuplicateDocId,
};

inline std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadTokenText: return "BadTokenText";
    case ViolationKind::kBadTokenIndex: return "BadTokenIndex";
    case ViolationKind::kSentencePartition: return "SentencePartition";
    case ViolationKind::kEmptyCluster: return "EmptyCluster";
    case ViolationKind::kSpanOutOfRange: return "SpanOutOfRange";
    case ViolationKind::kCrossSentenceSpan: return "CrossSentenceSpan";
    case ViolationKind::kUnsortedMentions: return "UnsortedMentions";
    case ViolationKind::kDuplicateSpanInCluster: return "DuplicateSpanInCluster";
    case ViolationKind::kCrossingMentionsInCluster:
      return "CrossingMentionsInCluster";
    case ViolationKind::kSpanInMultipleClusters: return "SpanInMultipleClusters";
    case ViolationKind::kDuplicateClusterId: return "DuplicateClusterId";
    case ViolationKind::kDuplicateDocId: return "DuplicateDocId";
  }
  return "Unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
  std::optional<int64_t> cluster_id;
  std::optional<MentionSpan> span;

  std::string ToString() const {
    return std::string(ViolationKindName(kind)) + ": " + detail;
  }
};

namespace internal {

inline std::string SpanText(const MentionSpan& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

inline bool TokenTextOk(std::string_view text) {
  if (text.empty()) return false;
  return text.find_first_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace internal

// Returns every broken document invariant. An empty result means the
// document is well formed and serializable.
inline std::vector<Violation> Validate(const Document& doc) {
  std::vector<Violation> out;
  const int64_t n = doc.token_count();

  for (int64_t i = 0; i < n; ++i) {
    const Token& t = doc.tokens[i];
    if (!internal::TokenTextOk(t.text)) {
      out.push_back({ViolationKind::kBadTokenText,
                     "token " + std::to_string(i) + " text '" + t.text + "'",
                     std::nullopt, std::nullopt});
    }
    if (t.index != i) {
      out.push_back({ViolationKind::kBadTokenIndex,
                     "token at position " + std::to_string(i) +
                         " carries index " + std::to_string(t.index),
                     std::nullopt, std::nullopt});
    }
    if (t.extra.size() != doc.tokens.front().extra.size()) {
      out.push_back({ViolationKind::kBadTokenText,
                     "token " + std::to_string(i) +
                         " has a different number of extra columns",
                     std::nullopt, std::nullopt});
    }
    for (const auto& col : t.extra) {
      if (!internal::TokenTextOk(col)) {
        out.push_back({ViolationKind::kBadTokenText,
                       "token " + std::to_string(i) + " has a bad extra column",
                       std::nullopt, std::nullopt});
        break;
      }
    }
  }

  // Sentence partition of [0, n); sentence_of maps token -> sentence.
  std::vector<int64_t> sentence_of(n, -1);
  int64_t expected = 0;
  bool partition_ok = true;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& r = doc.sentences[s];
    if (r.begin != expected || r.end <= r.begin || r.end > n) {
      partition_ok = false;
      out.push_back({ViolationKind::kSentencePartition,
                     "sentence " + std::to_string(s) + " covers [" +
                         std::to_string(r.begin) + "," + std::to_string(r.end) +
                         ") but should start at " + std::to_string(expected),
                     std::nullopt, std::nullopt});
      break;
    }
    for (int64_t i = r.begin; i < r.end; ++i) sentence_of[i] = s;
    expected = r.end;
  }
  if (partition_ok && expected != n) {
    partition_ok = false;
    out.push_back({ViolationKind::kSentencePartition,
                   "sentences end at " + std::to_string(expected) + " of " +
                       std::to_string(n) + " tokens",
                   std::nullopt, std::nullopt});
  }

  std::set<int64_t> ids;
  std::map<MentionSpan, int64_t> owner;
  for (const auto& c : doc.clusters) {
    const std::string where = "cluster " + std::to_string(c.id);
    if (!ids.insert(c.id).second || c.id < 0) {
      out.push_back({ViolationKind::kDuplicateClusterId,
                     where + " id is negative or repeated", c.id,
                     std::nullopt});
    }
    if (c.mentions.empty()) {
      out.push_back({ViolationKind::kEmptyCluster, where + " has no mentions",
                     c.id, std::nullopt});
    }
    for (size_t i = 0; i < c.mentions.size(); ++i) {
      const MentionSpan& m = c.mentions[i];
      const std::string at = where + " span " + internal::SpanText(m);
      if (m.start < 0 || m.start >= m.end || m.end > n) {
        out.push_back({ViolationKind::kSpanOutOfRange, at, c.id, m});
        continue;
      }
      if (partition_ok && sentence_of[m.start] != sentence_of[m.end - 1]) {
        out.push_back({ViolationKind::kCrossSentenceSpan, at, c.id, m});
      }
      if (i > 0) {
        const MentionSpan& prev = c.mentions[i - 1];
        if (prev == m) {
          out.push_back({ViolationKind::kDuplicateSpanInCluster, at, c.id, m});
        } else if (m < prev) {
          out.push_back({ViolationKind::kUnsortedMentions, at, c.id, m});
        }
      }
      auto [it, inserted] = owner.emplace(m, c.id);
      if (!inserted && it->second != c.id) {
        out.push_back({ViolationKind::kSpanInMultipleClusters,
                       at + " also in cluster " + std::to_string(it->second),
                       c.id, m});
      }
    }
    // Overlapping but non-nested mentions of one cluster cannot be written
    // as bracket markers.
    for (size_t i = 0; i < c.mentions.size(); ++i) {
      for (size_t j = i + 1; j < c.mentions.size(); ++j) {
        const auto& a = c.mentions[i];
        const auto& b = c.mentions[j];
        const bool overlap = a.start < b.end && b.start < a.end;
        if (overlap && !a.Contains(b) && !b.Contains(a)) {
          out.push_back({ViolationKind::kCrossingMentionsInCluster,
                         where + " spans " + internal::SpanText(a) + " and " +
                             internal::SpanText(b) + " cross",
                         c.id, b});
        }
      }
    }
  }
  return out;
}

// Checks corpus-level invariants (unique doc ids) plus every document.
inline std::vector<Violation> Validate(const Corpus& corpus) {
  std::vector<Violation> out;
  std::unordered_set<std::string> seen;
  for (const auto& d : corpus.documents) {
    for (auto v : Validate(d)) {
      v.detail = "doc " + d.doc_id + ": " + v.detail;
      out.push_back(std::move(v));
    }
    if (!seen.insert(d.doc_id).second) {
      out.push_back({ViolationKind::kDuplicateDocId,
                     "duplicate doc id " + d.doc_id, std::nullopt,
                     std::nullopt});
    }
  }
  return out;
}

struct CorpusStats {
  int64_t n_docs = 0;
  int64_t n_tokens = 0;
  int64_t n_clusters = 0;
  // Unordered within-cluster mention pairs.
  int64_t n_links = 0;
  int64_t n_mentions = 0;
  // Distinct lowercased token texts.
  int64_t vocab_size = 0;

  bool operator==(const CorpusStats&) const = default;
};

inline CorpusStats ComputeStats(const Corpus& corpus) {
  CorpusStats s;
  std::unordered_set<std::string> vocab;
  for (const auto& d : corpus.documents) {
    ++s.n_docs;
    s.n_tokens += d.token_count();
    for (const auto& t : d.tokens) vocab.insert(AsciiLower(t.text));
    for (const auto& c : d.clusters) {
      const auto m = static_cast<int64_t>(c.mentions.size());
      ++s.n_clusters;
      s.n_mentions += m;
      s.n_links += m * (m - 1) / 2;
    }
  }
  s.vocab_size = static_cast<int64_t>(vocab.size());
  return s;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_DOCUMENT_H_
