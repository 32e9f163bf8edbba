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

// Cluster-aware augmentation rules:
//
//   r1  swap masculine and feminine pronouns, gendered nouns and descriptors
//   r2  replace gendered relationship nouns with their neutral form
//   r3  replace gender descriptors with their neutral form
//   r4  pick one person cluster and neutralize all of its pronouns
//   r5  truncate the first name of every person mention ("John" -> "J.")
//   r6  like r4, but neutralize a single pronoun of the picked cluster
//
// All rules substitute one token for one token, so mention spans are kept
// as they are.

#ifndef COREF_FORGE_AUGMENT_H_
#define COREF_FORGE_AUGMENT_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coref_forge/document.h"
#include "coref_forge/error.h"
#include "coref_forge/lexicon.h"
#include "coref_forge/parallel.h"
#include "coref_forge/random.h"
#include "coref_forge/text.h"

namespace coref_forge {

enum class Rule {
  kR1SwapGender,
  kR2NeutralizeRelationship,
  kR3NeutralizeDescriptor,
  kR4NeutralizeClusterPronouns,
  kR5TruncateFirstNames,
  kR6NeutralizeOnePronoun,
};

inline std::string_view RuleName(Rule r) {
  switch (r) {
    case Rule::kR1SwapGender: return "r1";
    case Rule::kR2NeutralizeRelationship: return "r2";
    case Rule::kR3NeutralizeDescriptor: return "r3";
    case Rule::kR4NeutralizeClusterPronouns: return "r4";
    case Rule::kR5TruncateFirstNames: return "r5";
    case Rule::kR6NeutralizeOnePronoun: return "r6";
  }
  return "?";
}

struct RuleSpec {
  Rule rule = Rule::kR1SwapGender;
  // Paradigm that r4/r6 rewrite pronouns into.
  GenderClass target = GenderClass::NeoZie();

  bool operator==(const RuleSpec&) const = default;
};

// One augmented copy applies every rule of its set.
using RuleSet = std::vector<RuleSpec>;

struct AugmentOptions {
  // Pronoun classes that r4/r6 rewrite.
  std::vector<GenderClass> pronoun_sources = {GenderClass::Masculine(),
                                              GenderClass::Feminine()};
  // When set, r4/r6 leave a document without eligible clusters untouched
  // instead of failing with NoEligibleCluster.
  bool skip_ineligible = false;
};

struct AugmentPlan {
  std::vector<RuleSet> copies;
  uint64_t seed = 0;
  bool include_original = false;

  // r1, r2, r3 and r1+r2+r3 plus the original: five documents per input.
  static AugmentPlan Default5x(uint64_t seed = 0) {
    AugmentPlan p;
    p.copies = {{{Rule::kR1SwapGender}},
                {{Rule::kR2NeutralizeRelationship}},
                {{Rule::kR3NeutralizeDescriptor}},
                {{Rule::kR1SwapGender},
                 {Rule::kR2NeutralizeRelationship},
                 {Rule::kR3NeutralizeDescriptor}}};
    p.seed = seed;
    p.include_original = true;
    return p;
  }
};

// "r4" or "r4:they"; the target is only meaningful for r4 and r6.
inline RuleSpec ParseRuleSpec(std::string_view text) {
  const std::string lower = AsciiLower(Trim(text));
  const auto colon = lower.find(':');
  const std::string name = lower.substr(0, colon);
  RuleSpec spec;
  static constexpr std::array kRules = {
      Rule::kR1SwapGender, Rule::kR2NeutralizeRelationship,
      Rule::kR3NeutralizeDescriptor, Rule::kR4NeutralizeClusterPronouns,
      Rule::kR5TruncateFirstNames, Rule::kR6NeutralizeOnePronoun};
  bool found = false;
  for (Rule r : kRules) {
    if (RuleName(r) == name) {
      spec.rule = r;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown rule '" + std::string(text) + "'");
  }
  if (colon != std::string::npos) {
    if (spec.rule != Rule::kR4NeutralizeClusterPronouns &&
        spec.rule != Rule::kR6NeutralizeOnePronoun) {
      throw Error(ErrorCode::kInvalidArgument,
                  "only r4 and r6 take a target paradigm: '" +
                      std::string(text) + "'");
    }
    spec.target = GenderClass(lower.substr(colon + 1));
  }
  return spec;
}

// "r1+r2+r3" -> one rule set.
inline RuleSet ParseRuleSet(std::string_view text) {
  RuleSet set;
  for (auto part : Split(text, '+')) set.push_back(ParseRuleSpec(part));
  return set;
}

inline std::string RuleSetName(const RuleSet& set) {
  std::string out;
  for (const auto& r : set) {
    if (!out.empty()) out += '+';
    out += RuleName(r.rule);
  }
  return out;
}

namespace internal {

inline bool IsSource(const AugmentOptions& opts, const GenderClass& cls) {
  return std::find(opts.pronoun_sources.begin(), opts.pronoun_sources.end(),
                   cls) != opts.pronoun_sources.end();
}

// Token positions of single-token mentions of `c` that are pronouns of a
// source class.
inline std::vector<int64_t> SourcePronouns(const Document& doc,
                                           const Cluster& c,
                                           const GenderLexicon& lex,
                                           const AugmentOptions& opts) {
  std::vector<int64_t> out;
  for (const auto& m : c.mentions) {
    if (m.size() != 1) continue;
    const auto info = lex.Classify(doc.tokens[m.start].text);
    if (info && info->category == TokenCategory::kPronoun &&
        info->gender_class && IsSource(opts, *info->gender_class)) {
      out.push_back(m.start);
    }
  }
  return out;
}

inline bool IsPersonCluster(const Document& doc, const Cluster& c,
                            const GenderLexicon& lex) {
  for (const auto& m : c.mentions) {
    for (int64_t i = m.start; i < m.end; ++i) {
      const auto info = lex.Classify(doc.tokens[i].text);
      if (!info) continue;
      if (info->category == TokenCategory::kAddressTerm) return true;
      if (info->category == TokenCategory::kPronoun && m.size() == 1) {
        return true;
      }
    }
  }
  return false;
}

inline bool IsNameLike(std::string_view text, const GenderLexicon& lex) {
  static constexpr std::array<std::string_view, 10> kFunctionWords = {
      "the", "a", "an", "this", "that", "these", "those", "my", "our", "your"};
  if (text.size() < 2 || !IsAsciiUpper(text.front())) return false;
  if (lex.Classify(text)) return false;
  const std::string lower = AsciiLower(text);
  return std::find(kFunctionWords.begin(), kFunctionWords.end(), lower) ==
         kFunctionWords.end();
}

inline std::string Initial(std::string_view name) {
  return std::string(1, name.front()) + ".";
}

class Rewrites {
 public:
  explicit Rewrites(const Document& doc) : doc_(doc), forms_(doc.tokens.size()) {}

  // First proposal for a token wins.
  void Propose(int64_t i, std::optional<std::string> form) {
    if (!form || forms_[i]) return;
    forms_[i] = std::move(form);
  }

  Document Apply() const {
    Document out = doc_;
    for (size_t i = 0; i < forms_.size(); ++i) {
      if (forms_[i]) out.tokens[i].text = *forms_[i];
    }
    return out;
  }

 private:
  const Document& doc_;
  std::vector<std::optional<std::string>> forms_;
};

inline void ProposeClusterPronouns(const Document& doc, const Cluster& c,
                                   const GenderClass& target,
                                   const GenderLexicon& lex,
                                   const AugmentOptions& opts, Rewrites& rw) {
  for (int64_t i : SourcePronouns(doc, c, lex, opts)) {
    rw.Propose(i, lex.MapTo(doc.tokens[i].text, target));
  }
}

inline void ProposeFirstNames(const Document& doc, const GenderLexicon& lex,
                              Rewrites& rw) {
  for (const auto& c : doc.clusters) {
    if (!IsPersonCluster(doc, c, lex)) continue;
    for (const auto& m : c.mentions) {
      for (int64_t i = m.start; i + 1 < m.end; ++i) {
        const auto& text = doc.tokens[i].text;
        if (IsNameLike(text, lex) && IsNameLike(doc.tokens[i + 1].text, lex)) {
          rw.Propose(i, Initial(text));
          break;
        }
      }
    }
  }
}

inline void RequireParadigm(const GenderLexicon& lex, const GenderClass& cls) {
  if (!lex.FindParadigm(cls)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no pronoun paradigm for class '" + cls.name() + "'");
  }
}

}  // namespace internal

// Ids of clusters holding at least one single-token pronoun mention of a
// source class, in document order.
inline std::vector<int64_t> EligibleClusters(const Document& doc,
                                             const GenderLexicon& lex,
                                             const AugmentOptions& opts = {}) {
  std::vector<int64_t> out;
  for (const auto& c : doc.clusters) {
    if (!internal::SourcePronouns(doc, c, lex, opts).empty()) {
      out.push_back(c.id);
    }
  }
  return out;
}

// Uniform pick among eligible clusters.
inline int64_t PickR4Cluster(const Document& doc, Rng& rng,
                             const GenderLexicon& lex,
                             const AugmentOptions& opts = {}) {
  const auto eligible = EligibleClusters(doc, lex, opts);
  if (eligible.empty()) {
    throw Error(ErrorCode::kNoEligibleCluster,
                "doc " + doc.doc_id + " has no cluster with a pronoun");
  }
  return eligible[UniformIndex(rng, eligible.size())];
}

inline Document NeutralizeClusterPronouns(const Document& doc,
                                          int64_t cluster_id,
                                          const GenderClass& target,
                                          const GenderLexicon& lex,
                                          const AugmentOptions& opts = {}) {
  internal::RequireParadigm(lex, target);
  const Cluster* c = doc.FindCluster(cluster_id);
  if (c == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "doc " + doc.doc_id + " has no cluster " +
                    std::to_string(cluster_id));
  }
  internal::Rewrites rw(doc);
  internal::ProposeClusterPronouns(doc, *c, target, lex, opts, rw);
  return rw.Apply();
}

// R5. Idempotent: an initial is itself name-like and truncates to itself.
inline Document TruncateFirstNames(const Document& doc,
                                   const GenderLexicon& lex) {
  internal::Rewrites rw(doc);
  internal::ProposeFirstNames(doc, lex, rw);
  return rw.Apply();
}

// R6: one pronoun of one uniformly picked eligible cluster.
inline Document NeutralizeOnePronoun(const Document& doc, Rng& rng,
                                     const GenderClass& target,
                                     const GenderLexicon& lex,
                                     const AugmentOptions& opts = {}) {
  internal::RequireParadigm(lex, target);
  const int64_t id = PickR4Cluster(doc, rng, lex, opts);
  const auto pronouns =
      internal::SourcePronouns(doc, *doc.FindCluster(id), lex, opts);
  const int64_t pos = pronouns[UniformIndex(rng, pronouns.size())];
  internal::Rewrites rw(doc);
  rw.Propose(pos, lex.MapTo(doc.tokens[pos].text, target));
  return rw.Apply();
}

// Applies a rule set to one document. Every token is rewritten at most once;
// when rules compete for a token the earliest in the order
// r4, r6, r5, r2, r1, r3 wins. Random draws happen in that order too, so the
// result depends only on (doc, rules, seed).
inline Document ApplyRules(const Document& doc, const RuleSet& rules,
                           const GenderLexicon& lex, uint64_t seed,
                           const AugmentOptions& opts = {}) {
  auto find = [&](Rule r) -> const RuleSpec* {
    for (const auto& spec : rules) {
      if (spec.rule == r) return &spec;
    }
    return nullptr;
  };
  Rng rng(seed);
  internal::Rewrites rw(doc);

  auto pick = [&](const RuleSpec& spec) -> std::optional<int64_t> {
    internal::RequireParadigm(lex, spec.target);
    if (opts.skip_ineligible && EligibleClusters(doc, lex, opts).empty()) {
      return std::nullopt;
    }
    return PickR4Cluster(doc, rng, lex, opts);
  };

  if (const auto* r4 = find(Rule::kR4NeutralizeClusterPronouns)) {
    if (const auto id = pick(*r4)) {
      internal::ProposeClusterPronouns(doc, *doc.FindCluster(*id), r4->target,
                                       lex, opts, rw);
    }
  }
  if (const auto* r6 = find(Rule::kR6NeutralizeOnePronoun)) {
    if (const auto id = pick(*r6)) {
      const auto pronouns =
          internal::SourcePronouns(doc, *doc.FindCluster(*id), lex, opts);
      const int64_t pos = pronouns[UniformIndex(rng, pronouns.size())];
      rw.Propose(pos, lex.MapTo(doc.tokens[pos].text, r6->target));
    }
  }
  if (find(Rule::kR5TruncateFirstNames)) {
    internal::ProposeFirstNames(doc, lex, rw);
  }

  const bool r1 = find(Rule::kR1SwapGender) != nullptr;
  const bool r2 = find(Rule::kR2NeutralizeRelationship) != nullptr;
  const bool r3 = find(Rule::kR3NeutralizeDescriptor) != nullptr;
  if (r1 || r2 || r3) {
    for (int64_t i = 0; i < doc.token_count(); ++i) {
      const std::string& text = doc.tokens[i].text;
      const auto info = lex.Classify(text);
      if (!info) continue;
      if (r2 && info->category == TokenCategory::kGenderedNoun &&
          info->relational) {
        rw.Propose(i, lex.MapTo(text, GenderClass::Neutral()));
      }
      if (r1 && info->category != TokenCategory::kAddressTerm &&
          info->gender_class && info->gender_class->IsBinary()) {
        const auto other = *info->gender_class == GenderClass::Masculine()
                               ? GenderClass::Feminine()
                               : GenderClass::Masculine();
        rw.Propose(i, lex.MapTo(text, other));
      }
      if (r3 && info->category == TokenCategory::kDescriptor) {
        rw.Propose(i, lex.MapTo(text, GenderClass::Neutral()));
      }
    }
  }
  return rw.Apply();
}

inline std::string AugmentedDocId(std::string_view doc_id, size_t copy) {
  return std::string(doc_id) + "#aug" + std::to_string(copy);
}

// Output holds, per input document and in input order, the original (when
// requested) followed by copies 1..K. Copy k of a document is seeded from
// (plan.seed, doc_id, k), so `jobs` never changes the result.
inline Corpus AugmentCorpus(const Corpus& corpus, const AugmentPlan& plan,
                            const GenderLexicon& lex,
                            const AugmentOptions& opts = {}, int jobs = 1) {
  if (plan.copies.empty() && !plan.include_original) {
    throw Error(ErrorCode::kInvalidArgument,
                "augment plan requests no output documents");
  }
  const size_t per_doc = plan.copies.size() + (plan.include_original ? 1 : 0);
  std::vector<Document> out(corpus.documents.size() * per_doc);
  ParallelFor(corpus.documents.size(), jobs, [&](size_t d) {
    const Document& doc = corpus.documents[d];
    size_t slot = d * per_doc;
    if (plan.include_original) out[slot++] = doc;
    for (size_t k = 0; k < plan.copies.size(); ++k) {
      const uint64_t seed = DeriveSeed(plan.seed, doc.doc_id, k + 1);
      Document aug = ApplyRules(doc, plan.copies[k], lex, seed, opts);
      aug.doc_id = AugmentedDocId(doc.doc_id, k + 1);
      out[slot++] = std::move(aug);
    }
  });
  return Corpus{std::move(out)};
}

}  // namespace coref_forge

#endif  // COREF_FORGE_AUGMENT_H_
