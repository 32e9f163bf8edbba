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

// JSON-lines sidecar: one document per line,
//   {"doc_id": ..., "sentences": [[tok, ...], ...],
//    "clusters": [[[start, end], ...], ...]}
// with document-level half-open token indices. Cluster ids are positional.

#ifndef COREF_FORGE_JSONL_H_
#define COREF_FORGE_JSONL_H_

#include <string>
#include <string_view>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "coref_forge/conll.h"
#include "coref_forge/document.h"
#include "coref_forge/error.h"

namespace coref_forge {

inline Corpus ParseJsonl(std::string_view text) {
  Corpus corpus;
  std::unordered_set<std::string> ids;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    Document doc;
    try {
      const auto j = nlohmann::json::parse(line);
      doc = MakeDocument(
          j.at("doc_id").get<std::string>(),
          j.at("sentences").get<std::vector<std::vector<std::string>>>());
      int64_t id = 0;
      for (const auto& cluster : j.at("clusters")) {
        Cluster c{id++, {}};
        for (const auto& span : cluster) {
          if (!span.is_array() || span.size() != 2) {
            throw Error(ErrorCode::kMalformedInput,
                        where + ": span must be a [start, end] pair");
          }
          c.mentions.push_back({span[0].get<int64_t>(), span[1].get<int64_t>()});
        }
        doc.clusters.push_back(std::move(c));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, where + ": " + e.what());
    }
    SortMentions(doc);
    if (!ids.insert(doc.doc_id).second) {
      throw Error(ErrorCode::kDuplicateDocId, where + ": '" + doc.doc_id + "'");
    }
    const auto violations = Validate(doc);
    if (!violations.empty()) {
      throw Error(ErrorCode::kInvalidDocument,
                  where + ": " + violations.front().ToString());
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

// Extra token columns and cluster ids are not representable here and are
// dropped; clusters are written in document order.
inline std::string SerializeJsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    nlohmann::ordered_json j;
    j["doc_id"] = doc.doc_id;
    auto sentences = nlohmann::ordered_json::array();
    for (const auto& s : doc.sentences) {
      auto sent = nlohmann::ordered_json::array();
      for (int64_t i = s.begin; i < s.end; ++i) sent.push_back(doc.tokens[i].text);
      sentences.push_back(std::move(sent));
    }
    j["sentences"] = std::move(sentences);
    auto clusters = nlohmann::ordered_json::array();
    for (const auto& c : doc.clusters) {
      auto spans = nlohmann::ordered_json::array();
      for (const auto& m : c.mentions) spans.push_back({m.start, m.end});
      clusters.push_back(std::move(spans));
    }
    j["clusters"] = std::move(clusters);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_JSONL_H_
