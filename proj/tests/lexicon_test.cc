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

#include <string>

#include "coref_forge/lexicon.h"
#include "gtest/gtest.h"

namespace coref_forge {
namespace {

ErrorCode LoadError(const std::string& source) {
  try {
    LoadLexicon(source);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << source;
  return ErrorCode::kIo;
}

TEST(LoadLexiconTest, EmptyUserFileGivesDefaults) {
  const GenderLexicon a = LoadLexicon("");
  const GenderLexicon b = DefaultLexicon();
  EXPECT_EQ(a.paradigms().size(), 4u);
  EXPECT_EQ(a.nouns().size(), b.nouns().size());
  EXPECT_EQ(a.descriptors().size(), b.descriptors().size());
  EXPECT_EQ(a.address_terms(), b.address_terms());
  EXPECT_EQ(LoadLexicon("# nothing here\n\n").nouns().size(), b.nouns().size());
}

TEST(LoadLexiconTest, UserParadigm) {
  const GenderLexicon lex =
      LoadLexicon("[paradigms]\nxey,xey,xem,xyr,xyrs,xemself\n");
  const auto info = lex.Classify("xem");
  ASSERT_TRUE(info.has_value());
  EXPECT_EQ(info->category, TokenCategory::kPronoun);
  EXPECT_EQ(info->gender_class, GenderClass("xey"));
  EXPECT_EQ(info->slot, PronounSlot::kAccusative);
  EXPECT_EQ(lex.MapTo("Him", GenderClass("xey")), "Xem");
  EXPECT_EQ(lex.MapTo("XYRS", GenderClass::Masculine()), "HIS");
}

TEST(LoadLexiconTest, UserEntriesOverrideDefaults) {
  const GenderLexicon lex = LoadLexicon(
      "[nouns]\nboyfriend,girlfriend,significant-other,1\n"
      "[descriptors]\nlad,youth\n"
      "[address]\nsir\n");
  EXPECT_EQ(lex.MapTo("boyfriend", GenderClass::Neutral()), "significant-other");
  EXPECT_EQ(lex.MapTo("lad", GenderClass::Neutral()), "youth");
  EXPECT_EQ(lex.MapTo("lad", GenderClass::Feminine()), std::nullopt);
  EXPECT_EQ(lex.Classify("Sir")->category, TokenCategory::kAddressTerm);
}

TEST(LoadLexiconTest, PreferredSlotColumn) {
  const GenderLexicon lex =
      LoadLexicon("[paradigms]\nfeminine,she,her,her,hers,herself,poss_dep\n");
  EXPECT_EQ(lex.Classify("her")->slot, PronounSlot::kPossessiveDependent);
}

TEST(LoadLexiconTest, Errors) {
  EXPECT_EQ(LoadError("[paradigms]\nxey,xey,xem,xyr,xyrs\n"),
            ErrorCode::kMissingParadigmSlot);
  EXPECT_EQ(LoadError("[paradigms]\nxey,xey,xem,,xyrs,xemself\n"),
            ErrorCode::kMissingParadigmSlot);
  // "he" is already a masculine pronoun.
  EXPECT_EQ(LoadError("[paradigms]\nxey,he,xem,xyr,xyrs,xemself\n"),
            ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[nouns]\nhis,hers,x,0\n"), ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[nouns]\nlad,lass,boyfriend,0\n"),
            ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[nouns]\nsame,same,x,0\n"), ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[paradigms]\nneutral,a,b,c,d,e\n"),
            ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[address]\nshe\n"), ErrorCode::kConflictingEntry);
  EXPECT_EQ(LoadError("[nouns]\na,b\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(LoadError("[colors]\nred\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(LoadError("lad,youth\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(LoadError("[nouns]\nlad,lass,youth,maybe\n"), ErrorCode::kMalformedInput);
}

TEST(ClassifyTest, Examples) {
  const GenderLexicon lex = DefaultLexicon();
  const auto his = lex.Classify("his");
  ASSERT_TRUE(his.has_value());
  EXPECT_EQ(his->category, TokenCategory::kPronoun);
  EXPECT_EQ(his->gender_class, GenderClass::Masculine());
  EXPECT_EQ(his->slot, PronounSlot::kPossessiveDependent);

  EXPECT_FALSE(lex.Classify("partner").has_value());
  EXPECT_EQ(lex.Classify("they")->gender_class, GenderClass::NeutralThey());

  const auto bf = lex.Classify("Boyfriend");
  ASSERT_TRUE(bf.has_value());
  EXPECT_EQ(bf->category, TokenCategory::kGenderedNoun);
  EXPECT_EQ(bf->gender_class, GenderClass::Masculine());
  EXPECT_TRUE(bf->relational);
  EXPECT_FALSE(lex.Classify("king")->relational);

  EXPECT_EQ(lex.Classify("her")->slot, PronounSlot::kAccusative);
  EXPECT_EQ(lex.Classify("zir")->slot, PronounSlot::kAccusative);
  EXPECT_EQ(lex.Classify("FEMALE")->category, TokenCategory::kDescriptor);
  EXPECT_EQ(lex.Classify("Mr.")->category, TokenCategory::kAddressTerm);
}

TEST(MapToTest, Examples) {
  const GenderLexicon lex = DefaultLexicon();
  EXPECT_EQ(lex.MapTo("He", GenderClass::NeoZie()), "Zie");
  EXPECT_EQ(lex.MapTo("His", GenderClass::NeoZie()), "Zir");
  EXPECT_EQ(lex.MapTo("girlfriend", GenderClass::Neutral()), "partner");
  EXPECT_EQ(lex.MapTo("boyfriend", GenderClass::Feminine()), "girlfriend");
  EXPECT_EQ(lex.MapTo("male", GenderClass::Feminine()), "female");
  EXPECT_EQ(lex.MapTo("Woman", GenderClass::Neutral()), "Person");
  EXPECT_EQ(lex.MapTo("girl", GenderClass::Neutral()), "child");
  EXPECT_EQ(lex.MapTo("he", GenderClass::Neutral()), "they");
  EXPECT_EQ(lex.MapTo("table", GenderClass::Masculine()), std::nullopt);
  EXPECT_EQ(lex.MapTo("Mr.", GenderClass::Neutral()), std::nullopt);
  EXPECT_EQ(lex.MapTo("he", GenderClass("xey")), std::nullopt);
}

TEST(LexiconPropertyTest, NounInvolution) {
  const GenderLexicon lex = DefaultLexicon();
  for (const auto& n : lex.nouns()) {
    for (const std::string& t : {n.masculine, n.feminine}) {
      const auto f = lex.MapTo(t, GenderClass::Feminine());
      const auto m = lex.MapTo(t, GenderClass::Masculine());
      ASSERT_TRUE(f && m) << t;
      EXPECT_EQ(lex.MapTo(*f, GenderClass::Masculine()), n.masculine) << t;
      EXPECT_EQ(lex.MapTo(*m, GenderClass::Feminine()), n.feminine) << t;
    }
  }
}

std::vector<std::string> AllLexiconForms(const GenderLexicon& lex) {
  std::vector<std::string> out;
  for (const auto& p : lex.paradigms()) {
    for (const auto& f : p.forms) out.push_back(f);
  }
  for (const auto& n : lex.nouns()) {
    out.push_back(n.masculine);
    out.push_back(n.feminine);
  }
  for (const auto& d : lex.descriptors()) out.push_back(d.term);
  for (const auto& a : lex.address_terms()) out.push_back(a);
  return out;
}

TEST(LexiconPropertyTest, CasePreservedAndAgreesWithClassify) {
  const GenderLexicon lex = LoadLexicon("[paradigms]\nxey,xey,xem,xyr,xyrs,xemself\n");
  const std::vector<GenderClass> targets = {
      GenderClass::Masculine(), GenderClass::Feminine(), GenderClass::NeutralThey(),
      GenderClass::NeoZie(), GenderClass::Neutral(), GenderClass("xey")};
  int mapped = 0;
  for (const auto& lower : AllLexiconForms(lex)) {
    for (const std::string& t :
         {lower, ApplyCase(lower, CasePattern::kTitle),
          ApplyCase(lower, CasePattern::kUpper)}) {
      EXPECT_TRUE(lex.Classify(t).has_value()) << t;
      for (const auto& g : targets) {
        const auto out = lex.MapTo(t, g);
        if (!out) continue;
        ++mapped;
        if (t.size() > 1 && out->size() > 1) {
          EXPECT_EQ(DetectCase(*out), DetectCase(t)) << t << " -> " << *out;
        }
      }
    }
  }
  EXPECT_GT(mapped, 300);
  for (const std::string t : {"table", "partner", "person", "Smith", "."}) {
    EXPECT_FALSE(lex.Classify(t).has_value()) << t;
    for (const auto& g : targets) EXPECT_FALSE(lex.MapTo(t, g).has_value()) << t;
  }
}

}  // namespace
}  // namespace coref_forge
