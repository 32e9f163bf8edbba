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

// Gender lexicon: pronoun paradigms, gendered nouns, gender descriptors and
// terms of address, plus token classification and gender mapping.
//
// Lexicon files are plain text with four sections:
//
//   [paradigms]    class,nom,acc,poss_dep,poss_indep,refl[,preferred_slot]
//   [nouns]        masc,fem,neutral[,relational]
//   [descriptors]  term,neutral        (unpaired)
//                  masc,fem,neutral    (paired, swappable by gender)
//   [address]      term
//
// '#' starts a comment. All forms are stored lowercase.

#ifndef COREF_FORGE_LEXICON_H_
#define COREF_FORGE_LEXICON_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coref_forge/error.h"
#include "coref_forge/text.h"

namespace coref_forge {

class GenderClass {
 public:
  GenderClass() = default;
  explicit GenderClass(std::string name) : name_(AsciiLower(name)) {}

  static GenderClass Masculine() { return GenderClass("masculine"); }
  static GenderClass Feminine() { return GenderClass("feminine"); }
  static GenderClass NeutralThey() { return GenderClass("they"); }
  static GenderClass NeoZie() { return GenderClass("zie"); }
  // Map target meaning "the neutral form"; not a paradigm.
  static GenderClass Neutral() { return GenderClass("neutral"); }

  const std::string& name() const { return name_; }
  bool IsBinary() const {
    return name_ == "masculine" || name_ == "feminine";
  }

  auto operator<=>(const GenderClass&) const = default;

 private:
  std::string name_;
};

enum class PronounSlot {
  kNominative = 0,
  kAccusative = 1,
  kPossessiveDependent = 2,
  kPossessiveIndependent = 3,
  kReflexive = 4,
};
inline constexpr int kNumPronounSlots = 5;

inline std::string_view PronounSlotName(PronounSlot slot) {
  static constexpr std::array<std::string_view, kNumPronounSlots> kNames = {
      "nom", "acc", "poss_dep", "poss_indep", "refl"};
  return kNames[static_cast<int>(slot)];
}

inline std::optional<PronounSlot> ParsePronounSlot(std::string_view name) {
  for (int i = 0; i < kNumPronounSlots; ++i) {
    const auto slot = static_cast<PronounSlot>(i);
    if (PronounSlotName(slot) == name) return slot;
  }
  return std::nullopt;
}

struct PronounParadigm {
  GenderClass gender_class;
  std::array<std::string, kNumPronounSlots> forms;
  // Slot chosen when one form fills several slots ("her", "his"). Without
  // it, the first matching slot in declaration order wins.
  std::optional<PronounSlot> preferred_slot;

  const std::string& form(PronounSlot slot) const {
    return forms[static_cast<int>(slot)];
  }
};

struct GenderedNoun {
  std::string masculine;
  std::string feminine;
  std::string neutral;
  bool relational = false;
};

struct Descriptor {
  std::string term;
  std::string neutral;
  // Set for paired descriptors (male/female) only.
  std::optional<GenderClass> gender;
  std::optional<std::string> counterpart;
};

enum class TokenCategory { kPronoun, kGenderedNoun, kDescriptor, kAddressTerm };

inline std::string_view TokenCategoryName(TokenCategory c) {
  switch (c) {
    case TokenCategory::kPronoun: return "Pronoun";
    case TokenCategory::kGenderedNoun: return "GenderedNoun";
    case TokenCategory::kDescriptor: return "Descriptor";
    case TokenCategory::kAddressTerm: return "AddressTerm";
  }
  return "Unknown";
}

struct TokenGenderInfo {
  TokenCategory category;
  std::optional<GenderClass> gender_class;
  std::optional<PronounSlot> slot;
  bool relational = false;

  bool operator==(const TokenGenderInfo&) const = default;
};

class GenderLexicon {
 public:
  GenderLexicon() = default;

  const std::vector<PronounParadigm>& paradigms() const { return paradigms_; }
  const std::vector<GenderedNoun>& nouns() const { return nouns_; }
  const std::vector<Descriptor>& descriptors() const { return descriptors_; }
  const std::vector<std::string>& address_terms() const { return address_; }

  const PronounParadigm* FindParadigm(const GenderClass& cls) const {
    for (const auto& p : paradigms_) {
      if (p.gender_class == cls) return &p;
    }
    return nullptr;
  }

  // Paradigm used when a pronoun is mapped to GenderClass::Neutral().
  const GenderClass& neutral_pronoun_class() const { return neutral_pronouns_; }

  // Case-insensitive lookup; std::nullopt for tokens outside the lexicon
  // (including neutral noun forms such as "partner").
  std::optional<TokenGenderInfo> Classify(std::string_view token) const {
    const auto it = index_.find(AsciiLower(token));
    if (it == index_.end()) return std::nullopt;
    return it->second.info;
  }

  // Maps a token to the form of `target`, keeping its capitalization.
  // Pronouns map slot to slot; nouns and descriptors map to the counterpart
  // or neutral form.
  std::optional<std::string> MapTo(std::string_view token,
                                   const GenderClass& target) const {
    const auto it = index_.find(AsciiLower(token));
    if (it == index_.end()) return std::nullopt;
    const Entry& e = it->second;
    const CasePattern pattern = DetectCase(token);
    std::optional<std::string> lower;
    switch (e.info.category) {
      case TokenCategory::kPronoun: {
        const GenderClass& cls =
            target == GenderClass::Neutral() ? neutral_pronouns_ : target;
        if (const auto* p = FindParadigm(cls)) lower = p->form(*e.info.slot);
        break;
      }
      case TokenCategory::kGenderedNoun: {
        const GenderedNoun& n = nouns_[e.entry];
        if (target == GenderClass::Masculine()) lower = n.masculine;
        if (target == GenderClass::Feminine()) lower = n.feminine;
        if (target == GenderClass::Neutral()) lower = n.neutral;
        break;
      }
      case TokenCategory::kDescriptor: {
        const Descriptor& d = descriptors_[e.entry];
        if (target == GenderClass::Neutral()) {
          lower = d.neutral;
        } else if (d.gender && target == *d.gender) {
          lower = d.term;
        } else if (d.gender && d.counterpart && target.IsBinary()) {
          lower = d.counterpart;
        }
        break;
      }
      case TokenCategory::kAddressTerm:
        break;
    }
    if (!lower) return std::nullopt;
    return ApplyCase(*lower, pattern);
  }

  // Adds or replaces entries. Paradigms are keyed by class, nouns by either
  // gendered form, descriptors by term. Index() must run afterwards.
  void Upsert(PronounParadigm p) {
    for (auto& existing : paradigms_) {
      if (existing.gender_class == p.gender_class) {
        existing = std::move(p);
        return;
      }
    }
    paradigms_.push_back(std::move(p));
  }

  void Upsert(GenderedNoun n) {
    std::erase_if(nouns_, [&](const GenderedNoun& e) {
      return e.masculine == n.masculine || e.feminine == n.feminine ||
             e.masculine == n.feminine || e.feminine == n.masculine;
    });
    nouns_.push_back(std::move(n));
  }

  void Upsert(Descriptor d) {
    std::erase_if(descriptors_, [&](const Descriptor& e) {
      return e.term == d.term;
    });
    descriptors_.push_back(std::move(d));
  }

  void UpsertAddress(std::string term) {
    for (const auto& t : address_) {
      if (t == term) return;
    }
    address_.push_back(std::move(term));
  }

  // Rebuilds the token index and checks the lexicon invariants.
  void Index() {
    index_.clear();
    auto add = [&](const std::string& form, Entry entry,
                   std::string_view what) {
      auto [it, inserted] = index_.emplace(form, entry);
      if (!inserted) {
        throw Error(ErrorCode::kConflictingEntry,
                    "'" + form + "' (" + std::string(what) +
                        ") is already listed as " +
                        std::string(TokenCategoryName(it->second.info.category)));
      }
    };

    for (size_t i = 0; i < paradigms_.size(); ++i) {
      const PronounParadigm& p = paradigms_[i];
      if (p.gender_class == GenderClass::Neutral()) {
        throw Error(ErrorCode::kConflictingEntry,
                    "paradigm class 'neutral' is reserved");
      }
      std::vector<std::pair<std::string, PronounSlot>> chosen;
      for (int s = 0; s < kNumPronounSlots; ++s) {
        const auto slot = static_cast<PronounSlot>(s);
        const std::string& f = p.form(slot);
        bool seen = false;
        for (auto& [form, existing] : chosen) {
          if (form != f) continue;
          seen = true;
          if (p.preferred_slot == slot) existing = slot;
        }
        if (!seen) chosen.emplace_back(f, slot);
      }
      for (const auto& [form, slot] : chosen) {
        add(form,
            Entry{{TokenCategory::kPronoun, p.gender_class, slot, false}, i},
            "pronoun");
      }
    }
    for (size_t i = 0; i < nouns_.size(); ++i) {
      const GenderedNoun& n = nouns_[i];
      if (n.masculine == n.feminine) {
        throw Error(ErrorCode::kConflictingEntry,
                    "noun '" + n.masculine + "' is its own counterpart");
      }
      add(n.masculine,
          Entry{{TokenCategory::kGenderedNoun, GenderClass::Masculine(),
                 std::nullopt, n.relational},
                i},
          "noun");
      add(n.feminine,
          Entry{{TokenCategory::kGenderedNoun, GenderClass::Feminine(),
                 std::nullopt, n.relational},
                i},
          "noun");
    }
    for (size_t i = 0; i < descriptors_.size(); ++i) {
      const Descriptor& d = descriptors_[i];
      add(d.term,
          Entry{{TokenCategory::kDescriptor, d.gender, std::nullopt, false}, i},
          "descriptor");
    }
    for (size_t i = 0; i < address_.size(); ++i) {
      add(address_[i],
          Entry{{TokenCategory::kAddressTerm, std::nullopt, std::nullopt, false},
                i},
          "address term");
    }
    // Neutral targets must stay outside the lexicon so neutralization is
    // idempotent.
    for (const auto& n : nouns_) CheckNeutral(n.neutral);
    for (const auto& d : descriptors_) CheckNeutral(d.neutral);
    for (const auto& d : descriptors_) {
      if (!d.counterpart) continue;
      const auto it = index_.find(*d.counterpart);
      if (it == index_.end() ||
          it->second.info.category != TokenCategory::kDescriptor) {
        throw Error(ErrorCode::kConflictingEntry,
                    "descriptor '" + d.term + "' has no counterpart entry");
      }
    }
  }

 private:
  struct Entry {
    TokenGenderInfo info;
    size_t entry = 0;
  };

  void CheckNeutral(const std::string& form) const {
    if (const auto it = index_.find(form); it != index_.end()) {
      throw Error(ErrorCode::kConflictingEntry,
                  "neutral form '" + form + "' is itself listed as " +
                      std::string(TokenCategoryName(it->second.info.category)));
    }
  }

  std::vector<PronounParadigm> paradigms_;
  std::vector<GenderedNoun> nouns_;
  std::vector<Descriptor> descriptors_;
  std::vector<std::string> address_;
  GenderClass neutral_pronouns_ = GenderClass::NeutralThey();
  std::unordered_map<std::string, Entry> index_;
};

namespace internal {

inline std::string LexiconForm(std::string_view raw, int line_no) {
  const std::string form = AsciiLower(Trim(raw));
  if (form.empty() || form.find_first_of(" \t") != std::string::npos) {
    throw Error(ErrorCode::kMalformedInput,
                "lexicon line " + std::to_string(line_no) + ": bad form '" +
                    std::string(raw) + "'");
  }
  return form;
}

inline bool ParseFlag(std::string_view raw, int line_no) {
  const std::string v = AsciiLower(Trim(raw));
  if (v.empty() || v == "0" || v == "false" || v == "no") return false;
  if (v == "1" || v == "true" || v == "yes" || v == "relational") return true;
  throw Error(ErrorCode::kMalformedInput,
              "lexicon line " + std::to_string(line_no) + ": bad flag '" +
                  std::string(raw) + "'");
}

}  // namespace internal

// Applies the entries of one lexicon file on top of `lex` and re-indexes.
inline void ExtendLexicon(GenderLexicon& lex, std::string_view source) {
  enum class Section { kNone, kParadigms, kNouns, kDescriptors, kAddress };
  Section section = Section::kNone;
  int line_no = 0;
  size_t pos = 0;
  while (pos < source.size()) {
    auto nl = source.find('\n', pos);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view line = source.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::string at = "lexicon line " + std::to_string(line_no);

    if (line.front() == '[') {
      const std::string name = AsciiLower(line);
      if (name == "[paradigms]") section = Section::kParadigms;
      else if (name == "[nouns]") section = Section::kNouns;
      else if (name == "[descriptors]") section = Section::kDescriptors;
      else if (name == "[address]") section = Section::kAddress;
      else throw Error(ErrorCode::kMalformedInput, at + ": unknown section " + name);
      continue;
    }

    const auto fields = Split(line, ',');
    switch (section) {
      case Section::kNone:
        throw Error(ErrorCode::kMalformedInput, at + ": row before any section");
      case Section::kParadigms: {
        if (fields.size() < 1 + kNumPronounSlots) {
          throw Error(ErrorCode::kMissingParadigmSlot,
                      at + ": paradigm needs a class and " +
                          std::to_string(kNumPronounSlots) + " forms");
        }
        if (fields.size() > 2 + kNumPronounSlots) {
          throw Error(ErrorCode::kMalformedInput, at + ": too many fields");
        }
        PronounParadigm p;
        p.gender_class = GenderClass(internal::LexiconForm(fields[0], line_no));
        for (int s = 0; s < kNumPronounSlots; ++s) {
          if (Trim(fields[1 + s]).empty()) {
            throw Error(ErrorCode::kMissingParadigmSlot,
                        at + ": empty " +
                            std::string(PronounSlotName(
                                static_cast<PronounSlot>(s))) +
                            " form");
          }
          p.forms[s] = internal::LexiconForm(fields[1 + s], line_no);
        }
        if (fields.size() == 2 + kNumPronounSlots) {
          p.preferred_slot = ParsePronounSlot(AsciiLower(Trim(fields.back())));
          if (!p.preferred_slot) {
            throw Error(ErrorCode::kMalformedInput,
                        at + ": unknown slot '" + std::string(fields.back()) + "'");
          }
        }
        lex.Upsert(std::move(p));
        break;
      }
      case Section::kNouns: {
        if (fields.size() < 3 || fields.size() > 4) {
          throw Error(ErrorCode::kMalformedInput,
                      at + ": noun rows are masc,fem,neutral[,relational]");
        }
        lex.Upsert(GenderedNoun{
            internal::LexiconForm(fields[0], line_no),
            internal::LexiconForm(fields[1], line_no),
            internal::LexiconForm(fields[2], line_no),
            fields.size() == 4 && internal::ParseFlag(fields[3], line_no)});
        break;
      }
      case Section::kDescriptors: {
        if (fields.size() == 2) {
          lex.Upsert(Descriptor{internal::LexiconForm(fields[0], line_no),
                                internal::LexiconForm(fields[1], line_no),
                                std::nullopt, std::nullopt});
        } else if (fields.size() == 3) {
          const auto masc = internal::LexiconForm(fields[0], line_no);
          const auto fem = internal::LexiconForm(fields[1], line_no);
          const auto neutral = internal::LexiconForm(fields[2], line_no);
          lex.Upsert(Descriptor{masc, neutral, GenderClass::Masculine(), fem});
          lex.Upsert(Descriptor{fem, neutral, GenderClass::Feminine(), masc});
        } else {
          throw Error(ErrorCode::kMalformedInput,
                      at + ": descriptor rows are term,neutral or masc,fem,neutral");
        }
        break;
      }
      case Section::kAddress: {
        if (fields.size() != 1) {
          throw Error(ErrorCode::kMalformedInput, at + ": address rows are term");
        }
        lex.UpsertAddress(internal::LexiconForm(fields[0], line_no));
        break;
      }
    }
  }
  lex.Index();
}

inline constexpr std::string_view kDefaultLexicon = R"(
[paradigms]
masculine,he,him,his,his,himself
feminine,she,her,her,hers,herself
they,they,them,their,theirs,themselves
zie,zie,zir,zir,zirs,zirself

[nouns]
boyfriend,girlfriend,partner,1
boyfriends,girlfriends,partners,1
ex-boyfriend,ex-girlfriend,ex-partner,1
husband,wife,spouse,1
husbands,wives,spouses,1
ex-husband,ex-wife,ex-spouse,1
fiance,fiancee,partner,1
father,mother,parent,1
fathers,mothers,parents,1
dad,mom,parent,1
stepfather,stepmother,stepparent,1
son,daughter,child,1
sons,daughters,children,1
stepson,stepdaughter,stepchild,1
brother,sister,sibling,1
brothers,sisters,siblings,1
grandfather,grandmother,grandparent,1
grandson,granddaughter,grandchild,1
uncle,aunt,relative,1
nephew,niece,relative,1
gentleman,lady,person,0
gentlemen,ladies,people,0
king,queen,monarch,0
prince,princess,royal,0
actor,actress,performer,0
waiter,waitress,server,0
chairman,chairwoman,chairperson,0
spokesman,spokeswoman,spokesperson,0
businessman,businesswoman,businessperson,0
policeman,policewoman,officer,0

[descriptors]
male,female,person
males,females,people
man,woman,person
men,women,people
boy,girl,child
boys,girls,children

[address]
mr.
mr
mrs.
mrs
ms.
ms
mx.
dr.
)";

inline GenderLexicon DefaultLexicon() {
  GenderLexicon lex;
  ExtendLexicon(lex, kDefaultLexicon);
  return lex;
}

// Built-in defaults extended or overridden by a user file.
inline GenderLexicon LoadLexicon(std::string_view user_source) {
  GenderLexicon lex = DefaultLexicon();
  ExtendLexicon(lex, user_source);
  return lex;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_LEXICON_H_
