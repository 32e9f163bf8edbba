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

// Three-annotator majority adjudication.
//
// Each annotator's clusters are expanded into mention-pair links. A link is
// accepted when at least two annotators put both spans in one cluster; the
// merged clusters are the connected components of the accepted links.
// Mentions without an accepted link are unresolved and dropped (or kept as
// singletons when a majority marked them and keep_singletons is set).

#ifndef COREF_FORGE_ADJUDICATE_H_
#define COREF_FORGE_ADJUDICATE_H_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coref_forge/document.h"
#include "coref_forge/error.h"

namespace coref_forge {

struct AnnotationSet {
  std::string annotator_id;
  Document doc;
};

inline constexpr size_t kAnnotatorCount = 3;

struct MentionLink {
  // first < second.
  MentionSpan first;
  MentionSpan second;

  auto operator<=>(const MentionLink&) const = default;
};

struct LinkVote {
  MentionLink link;
  // Sorted annotator ids that hold this link.
  std::vector<std::string> annotators;

  int votes() const { return static_cast<int>(annotators.size()); }
  bool operator==(const LinkVote&) const = default;
};

// Two annotators marked spans whose boundaries differ by at most one token
// on each side, and neither marked the other's exact span.
struct NearMiss {
  std::string annotator_a;
  MentionSpan span_a;
  std::string annotator_b;
  MentionSpan span_b;

  auto operator<=>(const NearMiss&) const = default;
};

struct AdjudicationReport {
  std::vector<LinkVote> unanimous;
  std::vector<LinkVote> majority;
  std::vector<LinkVote> rejected;
  std::vector<MentionSpan> unresolved;
  std::vector<NearMiss> near_misses;

  bool operator==(const AdjudicationReport&) const = default;
};

struct AdjudicationResult {
  Document merged;
  AdjudicationReport report;
};

struct AdjudicateOptions {
  bool keep_singletons = false;
};

namespace internal {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

inline bool SameText(const Document& a, const Document& b) {
  if (a.token_count() != b.token_count() || a.sentences != b.sentences) {
    return false;
  }
  for (int64_t i = 0; i < a.token_count(); ++i) {
    if (a.tokens[i].text != b.tokens[i].text) return false;
  }
  return true;
}

}  // namespace internal

inline AdjudicationResult MajorityMerge(std::span<const AnnotationSet> sets,
                                        const AdjudicateOptions& opts = {}) {
  if (sets.size() != kAnnotatorCount) {
    throw Error(ErrorCode::kWrongAnnotatorCount,
                "majority merge needs exactly " +
                    std::to_string(kAnnotatorCount) + " annotation sets, got " +
                    std::to_string(sets.size()));
  }
  // Work in annotator-id order so the result ignores argument order.
  std::vector<const AnnotationSet*> order;
  for (const auto& s : sets) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const AnnotationSet* a, const AnnotationSet* b) {
              return a->annotator_id < b->annotator_id;
            });
  for (size_t i = 1; i < order.size(); ++i) {
    if (order[i]->annotator_id == order[i - 1]->annotator_id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "annotator id '" + order[i]->annotator_id + "' repeats");
    }
    if (!internal::SameText(order[0]->doc, order[i]->doc)) {
      throw Error(ErrorCode::kTokenMismatch,
                  "annotators '" + order[0]->annotator_id + "' and '" +
                      order[i]->annotator_id + "' disagree on the tokens of " +
                      order[0]->doc.doc_id);
    }
  }

  std::map<MentionLink, std::vector<std::string>> votes;
  std::map<MentionSpan, int> mention_votes;
  std::vector<std::set<MentionSpan>> marked(order.size());
  for (size_t a = 0; a < order.size(); ++a) {
    const AnnotationSet& set = *order[a];
    for (const auto& c : set.doc.clusters) {
      for (size_t i = 0; i < c.mentions.size(); ++i) {
        if (marked[a].insert(c.mentions[i]).second) {
          ++mention_votes[c.mentions[i]];
        }
        for (size_t j = i + 1; j < c.mentions.size(); ++j) {
          MentionLink link{std::min(c.mentions[i], c.mentions[j]),
                           std::max(c.mentions[i], c.mentions[j])};
          votes[link].push_back(set.annotator_id);
        }
      }
    }
  }

  AdjudicationReport report;
  std::vector<MentionSpan> spans;
  for (const auto& [span, n] : mention_votes) spans.push_back(span);
  auto index_of = [&](const MentionSpan& s) {
    return static_cast<size_t>(
        std::lower_bound(spans.begin(), spans.end(), s) - spans.begin());
  };
  internal::DisjointSets components(spans.size());
  std::vector<bool> linked(spans.size(), false);
  for (auto& [link, who] : votes) {
    std::sort(who.begin(), who.end());
    LinkVote v{link, who};
    if (v.votes() >= 2) {
      components.Union(index_of(link.first), index_of(link.second));
      linked[index_of(link.first)] = linked[index_of(link.second)] = true;
      (v.votes() == 3 ? report.unanimous : report.majority).push_back(v);
    } else {
      report.rejected.push_back(v);
    }
  }

  std::map<size_t, std::vector<MentionSpan>> groups;
  for (size_t i = 0; i < spans.size(); ++i) {
    if (linked[i]) {
      groups[components.Find(i)].push_back(spans[i]);
    } else if (opts.keep_singletons && mention_votes[spans[i]] >= 2) {
      groups[i].push_back(spans[i]);
    } else {
      report.unresolved.push_back(spans[i]);
    }
  }
  // Component roots are the smallest member index, so map order is first
  // mention order.
  Document merged = order[0]->doc;
  merged.clusters.clear();
  int64_t next_id = 0;
  for (auto& [root, members] : groups) {
    merged.clusters.push_back(Cluster{next_id++, std::move(members)});
  }

  for (size_t a = 0; a < order.size(); ++a) {
    for (size_t b = a + 1; b < order.size(); ++b) {
      for (const auto& sa : marked[a]) {
        if (marked[b].count(sa)) continue;
        for (const auto& sb : marked[b]) {
          if (sb == sa || marked[a].count(sb)) continue;
          if (std::llabs(sa.start - sb.start) <= 1 &&
              std::llabs(sa.end - sb.end) <= 1) {
            report.near_misses.push_back(
                {order[a]->annotator_id, sa, order[b]->annotator_id, sb});
          }
        }
      }
    }
  }
  std::sort(report.near_misses.begin(), report.near_misses.end());

  const auto violations = Validate(merged);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidDocument,
                "merged clusters for " + merged.doc_id +
                    " are not well formed: " + violations.front().ToString());
  }
  return {std::move(merged), std::move(report)};
}

}  // namespace coref_forge

#endif  // COREF_FORGE_ADJUDICATE_H_
