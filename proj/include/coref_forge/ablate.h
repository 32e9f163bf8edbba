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

// Gender ablations for pronoun-resolution probes:
//
//   +Pro   third-person gendered pronouns -> neutral paradigm
//   +Name  truncate first names (same operation as augmentation rule r5)
//   +Sem   gendered nouns and descriptors -> neutral forms
//   +Addr  delete terms of address
//
// The suite has nine members: the four singletons, the three pairs and the
// triple over {Name, Sem, Addr}, and all four together. +Pro never combines
// with others except in the all-four combo.

#ifndef COREF_FORGE_ABLATE_H_
#define COREF_FORGE_ABLATE_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coref_forge/augment.h"
#include "coref_forge/document.h"
#include "coref_forge/error.h"
#include "coref_forge/lexicon.h"
#include "coref_forge/span_remap.h"
#include "coref_forge/text.h"

namespace coref_forge {

enum class Ablation : uint8_t { kPro = 1, kName = 2, kSem = 4, kAddr = 8 };

inline constexpr std::array<Ablation, 4> kAllAblations = {
    Ablation::kPro, Ablation::kName, Ablation::kSem, Ablation::kAddr};

inline std::string_view AblationName(Ablation a) {
  switch (a) {
    case Ablation::kPro: return "pro";
    case Ablation::kName: return "name";
    case Ablation::kSem: return "sem";
    case Ablation::kAddr: return "addr";
  }
  return "?";
}

class AblationCombo {
 public:
  AblationCombo() = default;

  // Throws InvalidArgument for combos that pair +Pro with only some of the
  // other mechanisms.
  static AblationCombo Of(std::initializer_list<Ablation> parts) {
    AblationCombo c;
    for (Ablation a : parts) c.bits_ |= static_cast<uint8_t>(a);
    c.Check();
    return c;
  }

  // "name,sem" or "name+sem"; "none" is the empty combo.
  static AblationCombo Parse(std::string_view text) {
    AblationCombo c;
    const std::string lower = AsciiLower(Trim(text));
    if (lower == "none" || lower.empty()) return c;
    std::string normalized = lower;
    for (char& ch : normalized) {
      if (ch == '+') ch = ',';
    }
    for (auto part : Split(normalized, ',')) {
      part = Trim(part);
      bool found = false;
      for (Ablation a : kAllAblations) {
        if (AblationName(a) == part) {
          c.bits_ |= static_cast<uint8_t>(a);
          found = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown ablation '" + std::string(part) + "'");
      }
    }
    c.Check();
    return c;
  }

  bool Has(Ablation a) const { return bits_ & static_cast<uint8_t>(a); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  // "pro", "name+sem", ..., "none" for the empty combo.
  std::string Name() const {
    std::string out;
    for (Ablation a : kAllAblations) {
      if (!Has(a)) continue;
      if (!out.empty()) out += '+';
      out += AblationName(a);
    }
    return out.empty() ? "none" : out;
  }

  bool operator==(const AblationCombo&) const = default;

 private:
  void Check() const {
    if (Has(Ablation::kPro) && size() > 1 && size() < 4) {
      throw Error(ErrorCode::kInvalidArgument,
                  "+pro combines with other ablations only as all four: " +
                      Name());
    }
  }

  uint8_t bits_ = 0;
};

// The nine combos, in suite order.
inline std::vector<AblationCombo> AblationSuiteCombos() {
  using A = Ablation;
  return {AblationCombo::Of({A::kPro}),
          AblationCombo::Of({A::kName}),
          AblationCombo::Of({A::kSem}),
          AblationCombo::Of({A::kAddr}),
          AblationCombo::Of({A::kName, A::kSem}),
          AblationCombo::Of({A::kName, A::kAddr}),
          AblationCombo::Of({A::kSem, A::kAddr}),
          AblationCombo::Of({A::kName, A::kSem, A::kAddr}),
          AblationCombo::Of({A::kPro, A::kName, A::kSem, A::kAddr})};
}

struct AblateOptions {
  GenderClass pro_target = GenderClass::NeutralThey();
  // Classes rewritten by +Pro. "it" is not a person pronoun and is left out.
  std::vector<GenderClass> pro_sources = {GenderClass::Masculine(),
                                          GenderClass::Feminine()};
  // Drop mentions emptied by +Addr instead of failing.
  bool allow_drop = false;
};

inline Document Ablate(const Document& doc, const AblationCombo& combo,
                       const GenderLexicon& lex,
                       const AblateOptions& opts = {}) {
  Document out = doc;
  if (combo.Has(Ablation::kPro) && !lex.FindParadigm(opts.pro_target)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no pronoun paradigm for class '" + opts.pro_target.name() + "'");
  }
  if (combo.Has(Ablation::kPro) || combo.Has(Ablation::kSem)) {
    for (auto& t : out.tokens) {
      const auto info = lex.Classify(t.text);
      if (!info) continue;
      std::optional<std::string> form;
      if (combo.Has(Ablation::kPro) &&
          info->category == TokenCategory::kPronoun && info->gender_class &&
          std::find(opts.pro_sources.begin(), opts.pro_sources.end(),
                    *info->gender_class) != opts.pro_sources.end()) {
        form = lex.MapTo(t.text, opts.pro_target);
      }
      if (combo.Has(Ablation::kSem) &&
          (info->category == TokenCategory::kGenderedNoun ||
           info->category == TokenCategory::kDescriptor)) {
        form = lex.MapTo(t.text, GenderClass::Neutral());
      }
      if (form) t.text = *form;
    }
  }
  if (combo.Has(Ablation::kName)) out = TruncateFirstNames(out, lex);
  if (combo.Has(Ablation::kAddr)) {
    std::vector<bool> deleted(out.tokens.size(), false);
    bool any = false;
    for (size_t i = 0; i < out.tokens.size(); ++i) {
      const auto info = lex.Classify(out.tokens[i].text);
      if (info && info->category == TokenCategory::kAddressTerm) {
        deleted[i] = true;
        any = true;
      }
    }
    if (any) out = DeleteTokens(out, deleted, opts.allow_drop);
  }
  return out;
}

inline std::vector<std::pair<AblationCombo, Document>> AblationSuite(
    const Document& doc, const GenderLexicon& lex,
    const AblateOptions& opts = {}) {
  std::vector<std::pair<AblationCombo, Document>> out;
  for (const auto& combo : AblationSuiteCombos()) {
    out.emplace_back(combo, Ablate(doc, combo, lex, opts));
  }
  return out;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_ABLATE_H_
