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

#ifndef COREF_FORGE_SPAN_REMAP_H_
#define COREF_FORGE_SPAN_REMAP_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coref_forge/document.h"
#include "coref_forge/error.h"

namespace coref_forge {

// Monotone map from old token positions to new ones after deletions.
class SpanRemap {
 public:
  static SpanRemap Identity(int64_t n) {
    return FromDeletions(std::vector<bool>(n, false));
  }

  static SpanRemap FromDeletions(const std::vector<bool>& deleted) {
    SpanRemap r;
    r.before_.assign(deleted.size() + 1, 0);
    r.deleted_ = deleted;
    for (size_t i = 0; i < deleted.size(); ++i) {
      r.before_[i + 1] = r.before_[i] + (deleted[i] ? 0 : 1);
    }
    return r;
  }

  int64_t old_size() const { return static_cast<int64_t>(deleted_.size()); }
  int64_t new_size() const { return before_.back(); }

  std::optional<int64_t> Map(int64_t old_index) const {
    if (deleted_[old_index]) return std::nullopt;
    return before_[old_index];
  }

  // Surviving tokens of `span`, or nullopt when all of them were deleted.
  std::optional<MentionSpan> MapSpan(const MentionSpan& span) const {
    const MentionSpan out{before_[span.start], before_[span.end]};
    if (out.start == out.end) return std::nullopt;
    return out;
  }

 private:
  std::vector<int64_t> before_;
  std::vector<bool> deleted_;
};

// Removes the flagged tokens and compacts sentences and mentions. A mention
// that loses all its tokens, or collapses onto another mention, is an
// EmptyRemappedSpan error unless `allow_drop`, in which case it is dropped
// (and its cluster too, once empty).
inline Document DeleteTokens(const Document& doc,
                             const std::vector<bool>& deleted,
                             bool allow_drop) {
  const SpanRemap remap = SpanRemap::FromDeletions(deleted);
  Document out;
  out.doc_id = doc.doc_id;
  out.part = doc.part;
  for (int64_t i = 0; i < doc.token_count(); ++i) {
    if (deleted[i]) continue;
    Token t = doc.tokens[i];
    t.index = out.token_count();
    out.tokens.push_back(std::move(t));
  }
  for (const auto& s : doc.sentences) {
    const auto mapped = remap.MapSpan({s.begin, s.end});
    if (mapped) out.sentences.push_back({mapped->start, mapped->end});
  }
  std::map<MentionSpan, int64_t> owner;
  for (const auto& c : doc.clusters) {
    Cluster nc{c.id, {}};
    for (const auto& m : c.mentions) {
      const auto mapped = remap.MapSpan(m);
      const std::string where = "doc " + doc.doc_id + " cluster " +
                                std::to_string(c.id) + " span [" +
                                std::to_string(m.start) + "," +
                                std::to_string(m.end) + ")";
      if (!mapped) {
        if (allow_drop) continue;
        throw Error(ErrorCode::kEmptyRemappedSpan, where + " loses every token");
      }
      if (!owner.emplace(*mapped, c.id).second) {
        if (allow_drop) continue;
        throw Error(ErrorCode::kEmptyRemappedSpan,
                    where + " collapses onto another mention");
      }
      nc.mentions.push_back(*mapped);
    }
    if (!nc.mentions.empty()) out.clusters.push_back(std::move(nc));
  }
  // A shared start can pull a wider span ahead of a narrower one.
  SortMentions(out);
  return out;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_SPAN_REMAP_H_
