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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "coref_forge/conll.h"
#include "coref_forge/jsonl.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace coref_forge::cli {
namespace {

namespace fs = std::filesystem;
using ::coref_forge::testing::RandomDocument;
using ::coref_forge::testing::ReadFixture;
using ::coref_forge::testing::TextDocument;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coref_forge_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& content) const {
    std::ofstream(Path(name), std::ios::binary) << content;
    return Path(name);
  }

  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int Run(const std::vector<std::string>& args, const Environment& env = {}) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_, env);
  }

  // Leftover files in the scratch dir other than the given inputs.
  std::vector<std::string> Listing() const {
    std::vector<std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir_)) {
      out.push_back(fs::relative(e.path(), dir_).string());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::string ThreeDocCorpus() {
  Corpus c;
  c.documents.push_back(TextDocument("a", "Mr. John Smith said he left", {{{0, 3}, {4, 5}}}));
  c.documents.push_back(TextDocument("b", "His wife and he met / The woman smiled",
                                     {{{0, 1}, {3, 4}}, {{0, 2}, {5, 7}}}));
  c.documents.push_back(TextDocument("c", "The dog barked"));
  return SerializeConll(c);
}

// Two eligible clusters, so r4/r6 picks depend on the seed.
std::string TwoClusterCorpus() {
  Corpus c;
  for (int i = 0; i < 10; ++i) {
    c.documents.push_back(TextDocument("d" + std::to_string(i),
                                       "He met her and he thanked her",
                                       {{{0, 1}, {3, 4}}, {{2, 3}, {6, 7}}}));
  }
  return SerializeConll(c);
}

TEST_F(CliTest, ScoreAgainstItself) {
  const std::string g = Write("g.conll", ReadFixture("shopping.conll"));
  ASSERT_EQ(Run({"score", "--gold", g, "--sys", g}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("f1=1.000000\n"), std::string::npos);
  EXPECT_NE(out_.str().find("f1_num=1\nf1_den=1\n"), std::string::npos);

  ASSERT_EQ(Run({"score", "--gold", g, "--sys", g, "--json", "--slices", "binary,neo"}),
            kExitOk);
  const auto j = nlohmann::json::parse(out_.str().substr(out_.str().find('{')));
  EXPECT_EQ(j["f1"], 1.0);
  EXPECT_EQ(j["slice.binary.present"], true);
  EXPECT_EQ(j["slice.neo.present"], false);
}

TEST_F(CliTest, ScoreFixtureExactTerms) {
  const std::string g = Write("g.conll", SerializeConll(Corpus{{TextDocument(
                                             "d", "a b c d e",
                                             {{{0, 1}, {1, 2}, {2, 3}}, {{3, 4}, {4, 5}}})}}));
  const std::string s = Write("s.conll", SerializeConll(Corpus{{TextDocument(
                                             "d", "a b c d e",
                                             {{{0, 1}, {1, 2}}, {{2, 3}, {3, 4}, {4, 5}}})}}));
  ASSERT_EQ(Run({"score", "--gold", g, "--sys", s, "--report", Path("r.txt")}), kExitOk);
  const std::string report = Read("r.txt");
  EXPECT_NE(report.find("precision_num=3\nprecision_den=5\n"), std::string::npos);
  EXPECT_NE(report.find("f1=0.600000\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  const std::string in = Write("in.conll", ThreeDocCorpus());
  EXPECT_EQ(Run({"augment", "--in", in, "--out", Path("o.conll"), "--rules", "r9"}),
            kExitUsage);
  EXPECT_NE(err_.str().find("r9"), std::string::npos);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"augment", "--in", in}), kExitUsage);
  EXPECT_EQ(Run({"ablate", "--in", in, "--out-dir", Path("x"), "--combo", "pro,sem"}),
            kExitUsage);
  EXPECT_EQ(Run({"adjudicate", in, in, "--out", Path("o.conll")}), kExitUsage);
  EXPECT_EQ(Listing(), (std::vector<std::string>{"in.conll"}));
}

TEST_F(CliTest, AblateSuiteWritesNineFiles) {
  const std::string in = Write("in.conll", ThreeDocCorpus());
  ASSERT_EQ(Run({"ablate", "--in", in, "--out-dir", Path("abl"), "--suite"}), kExitOk)
      << err_.str();
  size_t docs = 0, files = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "abl")) {
    ++files;
    docs += ParseConll(Read("abl/" + e.path().filename().string())).documents.size();
  }
  EXPECT_EQ(files, 9u);
  EXPECT_EQ(docs, 27u);
  const Corpus all4 = ParseConll(Read("abl/pro+name+sem+addr.conll"));
  EXPECT_EQ(testing::Text(all4.documents[0]), "J. Smith said they left");
  EXPECT_EQ(testing::Text(all4.documents[1]), "Their spouse and they met The person smiled");
}

TEST_F(CliTest, NoPartialOutputOnFailure) {
  const std::string in = Write("in.conll", ThreeDocCorpus());
  // Document "c" has no pronoun cluster, so r4 fails there.
  EXPECT_EQ(Run({"augment", "--in", in, "--out", Path("o.conll"), "--rules", "r1,r4"}),
            kExitDataError);
  EXPECT_NE(err_.str().find("NoEligibleCluster"), std::string::npos) << err_.str();
  EXPECT_EQ(Run({"ablate", "--in", in, "--out-dir", Path("abl"), "--suite"}), kExitOk);
  fs::remove_all(dir_ / "abl");

  // "Mr." alone is a mention in the second document.
  const std::string addr = Write("addr.conll", SerializeConll(Corpus{
      {TextDocument("ok", "he left", {{{0, 1}}}),
       TextDocument("bad", "Mr. Smith said Mr. spoke", {{{0, 2}, {3, 4}}})}}));
  EXPECT_EQ(Run({"ablate", "--in", addr, "--out-dir", Path("abl"), "--suite"}),
            kExitDataError);
  const std::string bad = Write("bad.conll", "#begin document (x); part 000\nx 0 0 a (0\n");
  EXPECT_EQ(Run({"adjudicate", in, in, bad, "--out", Path("m.conll"), "--report",
                 Path("m.txt")}),
            kExitDataError);
  EXPECT_EQ(Run({"validate", "--in", bad}), kExitDataError);
  EXPECT_EQ(Run({"stats", "--in", Path("missing.conll")}), kExitDataError);
  EXPECT_EQ(Listing(),
            (std::vector<std::string>{"addr.conll", "bad.conll", "in.conll"}));
}

TEST_F(CliTest, AugmentDeterminismAndSeeds) {
  const std::string in = Write("in.conll", TwoClusterCorpus());
  const std::vector<std::string> base = {"augment", "--in", in, "--rules", "r1,r4,r6"};
  auto run = [&](const std::string& out, std::vector<std::string> extra) {
    auto args = base;
    args.push_back("--out");
    args.push_back(Path(out));
    args.insert(args.end(), extra.begin(), extra.end());
    EXPECT_EQ(Run(args), kExitOk) << err_.str();
    return Read(out);
  };
  const std::string a = run("a.conll", {"--seed", "42"});
  EXPECT_EQ(run("b.conll", {"--seed", "42"}), a);
  EXPECT_EQ(run("c.conll", {"--seed", "42", "--jobs", "4"}), a);
  EXPECT_NE(run("d.conll", {"--seed", "43"}), a);
  EXPECT_EQ(ParseConll(a).documents.size(), 30u);
}

TEST_F(CliTest, ConfigPrecedence) {
  const std::string in = Write("in.conll", TwoClusterCorpus());
  auto augment = [&](const std::string& out, std::vector<std::string> extra,
                     const Environment& env) {
    std::vector<std::string> args = {"augment", "--in", in, "--out", Path(out),
                                     "--rules", "r6"};
    args.insert(args.end(), extra.begin(), extra.end());
    EXPECT_EQ(Run(args, env), kExitOk) << err_.str();
    return Read(out);
  };
  const std::string seed5 = augment("s5.conll", {"--seed", "5"}, {});
  const std::string seed7 = augment("s7.conll", {"--seed", "7"}, {});
  ASSERT_NE(seed5, seed7);

  const Environment env = {{"COREF_FORGE_CONFIG", Write("cfg", "seed = 5\n# c\n")}};
  EXPECT_EQ(augment("c.conll", {}, env), seed5);
  EXPECT_EQ(augment("f.conll", {"--seed", "7"}, env), seed7);

  // Lexicon: env default, then the config file, then the flag.
  const std::string words = Write("w.conll", SerializeConll(Corpus{
      {TextDocument("w", "the lad and the knave", {{{1, 2}}})}}));
  const std::string lex1 = Write("l1.txt", "[nouns]\nlad,lass,youth,0\n");
  const std::string lex2 = Write("l2.txt", "[nouns]\nknave,dame,rogue,0\n");
  auto r1 = [&](std::vector<std::string> extra, const Environment& e) {
    std::vector<std::string> args = {"augment", "--in", words, "--out",
                                     Path("w.out.conll"), "--rules", "r1"};
    args.insert(args.end(), extra.begin(), extra.end());
    EXPECT_EQ(Run(args, e), kExitOk) << err_.str();
    return testing::Text(ParseConll(Read("w.out.conll")).documents[0]);
  };
  EXPECT_EQ(r1({}, {}), "the lad and the knave");
  EXPECT_EQ(r1({}, {{"COREF_FORGE_LEXICON", lex1}}), "the lass and the knave");
  const std::string cfg2 = Write("cfg2", "lexicon=" + lex2 + "\n");
  EXPECT_EQ(r1({}, {{"COREF_FORGE_LEXICON", lex1}, {"COREF_FORGE_CONFIG", cfg2}}),
            "the lad and the dame");
  EXPECT_EQ(r1({"--lexicon", lex1}, {{"COREF_FORGE_CONFIG", cfg2}}),
            "the lass and the knave");

  EXPECT_EQ(Run({"stats", "--in", in}, {{"COREF_FORGE_CONFIG", Write("b", "colour=red\n")}}),
            kExitUsage);
}

TEST_F(CliTest, OutputFormats) {
  const std::string in = Write("in.conll", ThreeDocCorpus());
  ASSERT_EQ(Run({"augment", "--in", in, "--out", Path("o.jsonl"), "--plan", "default5x"}),
            kExitOk)
      << err_.str();
  const Corpus jsonl = ParseJsonl(Read("o.jsonl"));
  EXPECT_EQ(jsonl.documents.size(), 15u);
  ASSERT_EQ(Run({"stats", "--in", Path("o.jsonl"), "--json"}), kExitOk) << err_.str();
  EXPECT_EQ(nlohmann::json::parse(out_.str())["n_docs"], 15);
  ASSERT_EQ(Run({"augment", "--in", Path("o.jsonl"), "--out", Path("o.txt"), "--rules",
                 "r2", "--format", "conll"}),
            kExitOk);
  EXPECT_EQ(ParseConll(Read("o.txt")).documents.size(), 15u);
}

TEST_F(CliTest, StatsValidateMapScoreAdjudicate) {
  const std::string a = Write("a.conll", ReadFixture("narrative.conll"));
  ASSERT_EQ(Run({"stats", "--in", a}), kExitOk);
  EXPECT_NE(out_.str().find("n_links=18\n"), std::string::npos);
  ASSERT_EQ(Run({"validate", "--in", a}), kExitOk);
  EXPECT_NE(out_.str().find("violations=0\n"), std::string::npos);

  const std::string sys = Write("s.conll", SerializeConll(Corpus{{TextDocument(
                                               "d", "Ann met Bob and she left",
                                               {{{0, 1}, {4, 5}}})}}));
  const std::string inst = Write("i.tsv", "d\t4:5\t0:1\t2:3\tA\nd\t4:5\t0:1\t2:3\tB\n");
  ASSERT_EQ(Run({"map-score", "--instances", inst, "--sys", sys}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("accuracy_num=1\naccuracy_den=2\n"), std::string::npos)
      << out_.str();

  const Document d = TextDocument("d", "Ann met Bob and she left");
  auto annot = [&](const std::string& name, std::vector<std::vector<MentionSpan>> cl) {
    Document x = d;
    for (size_t i = 0; i < cl.size(); ++i) x.clusters.push_back({int64_t(i), cl[i]});
    return Write(name, SerializeConll(Corpus{{x}}));
  };
  const std::string a1 = annot("a1.conll", {{{0, 1}, {4, 5}}});
  const std::string a2 = annot("a2.conll", {{{0, 1}, {4, 5}}});
  const std::string a3 = annot("a3.conll", {{{2, 3}, {4, 5}}});
  ASSERT_EQ(Run({"adjudicate", a1, a2, a3, "--out", Path("m.conll"), "--report",
                 Path("m.txt")}),
            kExitOk)
      << err_.str();
  const Corpus merged = ParseConll(Read("m.conll"));
  EXPECT_EQ(merged.documents[0].clusters.size(), 1u);
  EXPECT_EQ(merged.documents[0].clusters[0].mentions,
            (std::vector<MentionSpan>{{0, 1}, {4, 5}}));
  EXPECT_FALSE(Read("m.txt").empty());
}

}  // namespace
}  // namespace coref_forge::cli
