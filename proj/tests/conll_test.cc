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

#include <random>
#include <string>

#include "coref_forge/conll.h"
#include "coref_forge/jsonl.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace coref_forge {
namespace {

ErrorCode ParseError(const std::string& text) {
  try {
    ParseConll(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::kIo;
}

TEST(ParseConllTest, SmallestDocument) {
  const Corpus c = ParseConll(
      "#begin document (d); part 000\n"
      "d 0 0 John (0)\n"
      "d 0 1 fell -\n"
      "\n"
      "#end document\n");
  ASSERT_EQ(c.documents.size(), 1u);
  const Document& doc = c.documents[0];
  EXPECT_EQ(doc.doc_id, "d");
  EXPECT_EQ(doc.TokenTexts(), (std::vector<std::string>{"John", "fell"}));
  ASSERT_EQ(doc.clusters.size(), 1u);
  EXPECT_EQ(doc.clusters[0].mentions, (std::vector<MentionSpan>{{0, 1}}));
}

TEST(ParseConllTest, NestedMarkers) {
  // "(0(1" opens both clusters on token 0; 1 closes on token 1, 0 on 2.
  const Corpus c = ParseConll(
      "#begin document (d); part 000\n"
      "d 0 0 his (0(1\n"
      "d 0 1 sister 1)\n"
      "d 0 2 Ann 0)\n"
      "#end document\n");
  const Document& doc = c.documents[0];
  ASSERT_EQ(doc.clusters.size(), 2u);
  EXPECT_EQ(doc.clusters[0].mentions, (std::vector<MentionSpan>{{0, 3}}));
  EXPECT_EQ(doc.clusters[1].mentions, (std::vector<MentionSpan>{{0, 2}}));
}

TEST(ParseConllTest, NestedSpansOfOneClusterPairInnermostFirst) {
  const Corpus c = ParseConll(
      "#begin document (d); part 000\n"
      "d 0 0 a (4|(4\n"
      "d 0 1 b 4)\n"
      "d 0 2 c 4)|(4)\n"
      "#end document\n");
  EXPECT_EQ(c.documents[0].clusters[0].mentions,
            (std::vector<MentionSpan>{{0, 2}, {0, 3}, {2, 3}}));
}

TEST(ParseConllTest, KeepsOpaqueColumnsAndPart) {
  const Corpus c = ParseConll(
      "#begin document (bc/cctv/00/x); part 002\n"
      "bc/cctv/00/x 2 0 Hi UH * -\n"
      "#end document\n");
  const Document& doc = c.documents[0];
  EXPECT_EQ(doc.doc_id, "bc/cctv/00/x");
  EXPECT_EQ(doc.part, 2);
  EXPECT_EQ(doc.tokens[0].extra, (std::vector<std::string>{"UH", "*"}));
}

TEST(ParseConllTest, UnclosedMarkerIsUnbalanced) {
  try {
    ParseConll("#begin document (d); part 000\nd 0 0 John (0\nd 0 1 fell -\n"
               "#end document\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnbalancedBracket);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseConllTest, ErrorCases) {
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x 0)\n#end document\n"),
            ErrorCode::kUnbalancedBracket);
  // A span may not run across a blank line.
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x (0\n\nd 0 0 y 0)\n"
                       "#end document\n"),
            ErrorCode::kUnbalancedBracket);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 x -\n#end document\n"),
            ErrorCode::kBadColumnCount);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x -\nd 0 1 y P -\n"
                       "#end document\n"),
            ErrorCode::kBadColumnCount);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x (a)\n#end document\n"),
            ErrorCode::kBadCorefMarker);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x -\n#end document\n"
                       "#begin document (d); part 000\nd 0 0 x -\n#end document\n"),
            ErrorCode::kDuplicateDocId);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x (0)|(0)\n"
                       "#end document\n"),
            ErrorCode::kInvalidDocument);
  EXPECT_EQ(ParseError("#begin document (d); part 000\nd 0 0 x -\n"),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(ParseError("d 0 0 x -\n"), ErrorCode::kMalformedInput);
}

TEST(SerializeConllTest, EmptyCorpusIsEmpty) {
  EXPECT_EQ(SerializeConll(Corpus{}), "");
  EXPECT_EQ(SerializeConll(Corpus{{Document{"e", 0, {}, {}, {}}}}),
            "#begin document (e); part 000\n#end document\n");
}

TEST(SerializeConllTest, GoldenFiles) {
  for (const char* name : {"shopping.conll", "narrative.conll"}) {
    const std::string golden = testing::ReadFixture(name);
    ASSERT_FALSE(golden.empty()) << name;
    EXPECT_EQ(SerializeConll(ParseConll(golden)), golden) << name;
  }
}

TEST(SerializeConllTest, RoundTripOnRandomDocuments) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Corpus c{{testing::RandomDocument(rng, "a"),
              testing::RandomDocument(rng, "b/" + std::to_string(i))}};
    const std::string once = SerializeConll(c);
    const Corpus parsed = ParseConll(once);
    EXPECT_EQ(parsed, c);
    EXPECT_EQ(SerializeConll(parsed), once);
  }
}

TEST(SerializeConllTest, CanonicalizesForeignMarkerLayout) {
  const std::string loose =
      "#begin document (d); part 7\n"
      "d   7  0   a   (1(0)\n"
      "d   7  1   b   1)\n"
      "#end document\n";
  const std::string canonical = SerializeConll(ParseConll(loose));
  EXPECT_EQ(canonical,
            "#begin document (d); part 007\n"
            "d\t7\t0\ta\t(1|(0)\n"
            "d\t7\t1\tb\t1)\n"
            "\n"
            "#end document\n");
  EXPECT_EQ(SerializeConll(ParseConll(canonical)), canonical);
}

TEST(JsonlTest, RoundTripKeepsTokensAndSpans) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Corpus c{{testing::RandomDocument(rng, "doc" + std::to_string(i))}};
    const Corpus back = ParseJsonl(SerializeJsonl(c));
    ASSERT_EQ(back.documents.size(), 1u);
    const Document& a = c.documents[0];
    const Document& b = back.documents[0];
    EXPECT_EQ(a.TokenTexts(), b.TokenTexts());
    EXPECT_EQ(a.sentences, b.sentences);
    ASSERT_EQ(a.clusters.size(), b.clusters.size());
    for (size_t k = 0; k < a.clusters.size(); ++k) {
      EXPECT_EQ(a.clusters[k].mentions, b.clusters[k].mentions);
    }
    EXPECT_EQ(SerializeJsonl(back), SerializeJsonl(c));
  }
}

TEST(JsonlTest, FieldsAndErrors) {
  const Corpus c = ParseJsonl(
      R"({"sentences": [["John", "fell"], ["He", "rose"]], "doc_id": "x", "clusters": [[[0, 1], [2, 3]]]})"
      "\n");
  const Document& doc = c.documents[0];
  EXPECT_EQ(doc.sentences, (std::vector<SentenceRange>{{0, 2}, {2, 4}}));
  EXPECT_EQ(doc.clusters[0].mentions, (std::vector<MentionSpan>{{0, 1}, {2, 3}}));
  EXPECT_EQ(SerializeJsonl(c),
            R"({"doc_id":"x","sentences":[["John","fell"],["He","rose"]],"clusters":[[[0,1],[2,3]]]})"
            "\n");

  EXPECT_THROW(ParseJsonl(R"({"doc_id": "x"})"), Error);
  try {
    ParseJsonl(R"({"doc_id": "x", "sentences": [["a", "b"]], "clusters": [[[1, 3]]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDocument);
  }
}

}  // namespace
}  // namespace coref_forge
