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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "coref_forge/coref_forge.h"
#include "coref_forge/parallel.h"

namespace coref_forge::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool IsJsonlPath(std::string_view path) {
  return path.ends_with(".jsonl") || path.ends_with(".json");
}

Corpus ReadCorpus(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return IsJsonlPath(path) ? ParseJsonl(text) : ParseConll(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string OutputFormat(const Config& config, std::string_view out_path) {
  if (!config.format.empty()) return config.format;
  return IsJsonlPath(out_path) ? "jsonl" : "conll";
}

std::string SerializeCorpus(const Corpus& corpus, std::string_view format) {
  return format == "jsonl" ? SerializeJsonl(corpus) : SerializeConll(corpus);
}

// Files are staged next to their destination and renamed only once every
// file of the command has been written.
class OutputBatch {
 public:
  void Add(std::string path, std::string content) {
    files_.emplace_back(std::move(path), std::move(content));
  }

  void Commit() {
    std::vector<std::string> staged;
    try {
      for (const auto& [path, content] : files_) {
        const fs::path parent = fs::path(path).parent_path();
        if (!parent.empty()) fs::create_directories(parent);
        const std::string tmp = path + ".partial";
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        staged.push_back(tmp);
        out << content;
        out.close();
        if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
      }
      for (size_t i = 0; i < files_.size(); ++i) {
        fs::rename(staged[i], files_[i].first);
      }
    } catch (const fs::filesystem_error& e) {
      Discard(staged);
      throw Error(ErrorCode::kIo, e.what());
    } catch (...) {
      Discard(staged);
      throw;
    }
  }

 private:
  static void Discard(const std::vector<std::string>& staged) {
    std::error_code ec;
    for (const auto& p : staged) fs::remove(p, ec);
  }

  std::vector<std::pair<std::string, std::string>> files_;
};

std::string Decimal(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", ToDouble(r));
  return buf;
}

std::string Decimal(double d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", d);
  return buf;
}

// Ordered key/value report, rendered as key=value lines or one JSON object.
class Report {
 public:
  void Set(std::string key, std::string value) {
    ordered_json j = value;
    Add(std::move(key), std::move(value), std::move(j));
  }
  void Set(std::string key, const char* value) { Set(std::move(key), std::string(value)); }
  void Set(std::string key, int64_t value) {
    Add(std::move(key), std::to_string(value), value);
  }
  void SetBool(std::string key, bool value) {
    Add(std::move(key), value ? "true" : "false", value);
  }
  void SetDecimal(std::string key, double value) {
    Add(std::move(key), Decimal(value), value);
  }
  void SetRatio(const std::string& key, const Rational& r) {
    SetDecimal(key, ToDouble(r));
    SetInteger(key + "_num", boost::multiprecision::numerator(r));
    SetInteger(key + "_den", boost::multiprecision::denominator(r));
  }

  std::string Text() const {
    std::string out;
    for (const auto& f : fields_) out += f.key + "=" + f.text + "\n";
    return out;
  }

  std::string Json() const {
    ordered_json j = ordered_json::object();
    for (const auto& f : fields_) j[f.key] = f.json;
    return j.dump(2) + "\n";
  }

 private:
  struct Field {
    std::string key;
    std::string text;
    ordered_json json;
  };

  void Add(std::string key, std::string text, ordered_json json) {
    fields_.push_back({std::move(key), std::move(text), std::move(json)});
  }

  // Exact integers beyond int64 stay strings in JSON.
  void SetInteger(std::string key, const boost::multiprecision::cpp_int& v) {
    if (v <= std::numeric_limits<int64_t>::max() &&
        v >= std::numeric_limits<int64_t>::min()) {
      Set(std::move(key), v.convert_to<int64_t>());
    } else {
      Set(std::move(key), v.str());
    }
  }

  std::vector<Field> fields_;
};

struct Logger {
  int verbosity = 0;
  std::ostream* err = nullptr;
  void Info(const std::string& msg) const {
    if (verbosity > 0) *err << "coref-forge: " << msg << "\n";
  }
};

void ApplyConfigFile(const std::string& path, Config& config) {
  const std::string text = ReadFile(path);
  int line_no = 0;
  for (auto raw : Split(text, '\n')) {
    ++line_no;
    auto line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) +
                       ": expected key=value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key == "lexicon") {
      config.lexicon_path = value;
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw UsageError(path + ": bad seed '" + value + "'");
      }
    } else if (key == "format") {
      config.format = value;
    } else if (key == "verbosity") {
      try {
        config.verbosity = std::stoi(value);
      } catch (const std::exception&) {
        throw UsageError(path + ": bad verbosity '" + value + "'");
      }
    } else {
      throw UsageError(path + ": unknown config key '" + key + "'");
    }
  }
}

// Flags shared by every subcommand.
struct CommonFlags {
  std::optional<std::string> lexicon;
  std::optional<uint64_t> seed;
  std::optional<std::string> format;
  int verbose = 0;
  bool json = false;
  int jobs = 1;
};

void AddCommonFlags(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--lexicon", flags.lexicon,
                  "Lexicon file extending the built-in lexicon");
  sub->add_option("--seed", flags.seed, "Random seed (default 0)");
  sub->add_option("--format", flags.format, "Output corpus format")
      ->check(CLI::IsMember({"conll", "jsonl"}));
  sub->add_flag("-v,--verbose", flags.verbose, "Log progress to stderr");
  sub->add_flag("--json", flags.json, "Print reports as one JSON object");
  sub->add_option("--jobs", flags.jobs, "Documents processed in parallel")
      ->check(CLI::PositiveNumber);
}

Config Resolve(Config config, const CommonFlags& flags) {
  if (flags.lexicon) config.lexicon_path = flags.lexicon;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.format) config.format = *flags.format;
  config.verbosity += flags.verbose;
  if (!config.format.empty() && config.format != "conll" &&
      config.format != "jsonl") {
    throw UsageError("unknown format '" + config.format + "'");
  }
  return config;
}

GenderLexicon BuildLexicon(const Config& config) {
  if (!config.lexicon_path) return DefaultLexicon();
  return LoadLexicon(ReadFile(*config.lexicon_path));
}

// ---- subcommands ----

int RunValidate(const std::string& in_path, const CommonFlags& flags,
                std::ostream& out) {
  // Parsing already rejects broken documents; reaching here means the file
  // is well formed.
  const Corpus corpus = ReadCorpus(in_path);
  const auto violations = Validate(corpus);
  Report r;
  r.Set("documents", static_cast<int64_t>(corpus.documents.size()));
  r.Set("violations", static_cast<int64_t>(violations.size()));
  for (size_t i = 0; i < violations.size(); ++i) {
    r.Set("violation." + std::to_string(i), violations[i].ToString());
  }
  out << (flags.json ? r.Json() : r.Text());
  return violations.empty() ? kExitOk : kExitDataError;
}

int RunStats(const std::string& in_path, const CommonFlags& flags,
             std::ostream& out) {
  const CorpusStats s = ComputeStats(ReadCorpus(in_path));
  Report r;
  r.Set("n_docs", s.n_docs);
  r.Set("n_tokens", s.n_tokens);
  r.Set("n_clusters", s.n_clusters);
  r.Set("n_mentions", s.n_mentions);
  r.Set("n_links", s.n_links);
  r.Set("vocab_size", s.vocab_size);
  out << (flags.json ? r.Json() : r.Text());
  return kExitOk;
}

struct AugmentArgs {
  std::string in;
  std::string out;
  std::optional<std::string> plan;
  std::optional<std::string> rules;
  bool keep_original = false;
  bool skip_ineligible = false;
};

AugmentPlan BuildPlan(const AugmentArgs& args, uint64_t seed) {
  if (args.plan.has_value() == args.rules.has_value()) {
    throw UsageError("give exactly one of --plan or --rules");
  }
  AugmentPlan plan;
  if (args.plan) {
    if (*args.plan != "default5x") {
      throw UsageError("unknown plan '" + *args.plan + "'");
    }
    plan = AugmentPlan::Default5x(seed);
  } else {
    try {
      for (auto copy : Split(*args.rules, ',')) {
        plan.copies.push_back(ParseRuleSet(copy));
      }
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    plan.seed = seed;
    plan.include_original = args.keep_original;
  }
  if (args.keep_original) plan.include_original = true;
  return plan;
}

int RunAugment(const AugmentArgs& args, const Config& config,
               const CommonFlags& flags, const Logger& log,
               std::ostream& out) {
  const AugmentPlan plan = BuildPlan(args, config.seed);
  const GenderLexicon lex = BuildLexicon(config);
  const Corpus corpus = ReadCorpus(args.in);
  AugmentOptions opts;
  opts.skip_ineligible = args.skip_ineligible;
  const Corpus augmented = AugmentCorpus(corpus, plan, lex, opts, flags.jobs);
  log.Info("augmented " + std::to_string(corpus.documents.size()) + " -> " +
           std::to_string(augmented.documents.size()) + " documents");

  OutputBatch batch;
  batch.Add(args.out,
            SerializeCorpus(augmented, OutputFormat(config, args.out)));
  batch.Commit();

  Report r;
  r.Set("input_documents", static_cast<int64_t>(corpus.documents.size()));
  r.Set("output_documents", static_cast<int64_t>(augmented.documents.size()));
  r.Set("seed", std::to_string(plan.seed));
  std::string copies;
  for (const auto& c : plan.copies) {
    copies += (copies.empty() ? "" : ",") + RuleSetName(c);
  }
  r.Set("copies", copies);
  r.SetBool("include_original", plan.include_original);
  out << (flags.json ? r.Json() : r.Text());
  return kExitOk;
}

struct AblateArgs {
  std::string in;
  std::string out_dir;
  bool suite = false;
  std::optional<std::string> combo;
  bool allow_drop = false;
};

int RunAblate(const AblateArgs& args, const Config& config,
              const CommonFlags& flags, const Logger& log, std::ostream& out) {
  if (args.suite == args.combo.has_value()) {
    throw UsageError("give exactly one of --suite or --combo");
  }
  std::vector<AblationCombo> combos;
  if (args.suite) {
    combos = AblationSuiteCombos();
  } else {
    try {
      combos.push_back(AblationCombo::Parse(*args.combo));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const GenderLexicon lex = BuildLexicon(config);
  const Corpus corpus = ReadCorpus(args.in);
  AblateOptions opts;
  opts.allow_drop = args.allow_drop;

  const std::string format = config.format.empty() ? "conll" : config.format;
  const std::string ext = format == "jsonl" ? ".jsonl" : ".conll";
  std::vector<Corpus> outputs(combos.size());
  for (auto& o : outputs) o.documents.resize(corpus.documents.size());
  ParallelFor(corpus.documents.size(), flags.jobs, [&](size_t d) {
    for (size_t c = 0; c < combos.size(); ++c) {
      outputs[c].documents[d] =
          Ablate(corpus.documents[d], combos[c], lex, opts);
    }
  });

  OutputBatch batch;
  Report r;
  int64_t written = 0;
  for (size_t c = 0; c < combos.size(); ++c) {
    const std::string path =
        (fs::path(args.out_dir) / (combos[c].Name() + ext)).string();
    batch.Add(path, SerializeCorpus(outputs[c], format));
    r.Set("file." + combos[c].Name(), path);
    written += static_cast<int64_t>(outputs[c].documents.size());
  }
  batch.Commit();
  log.Info("wrote " + std::to_string(combos.size()) + " ablation files");
  r.Set("variants", static_cast<int64_t>(combos.size()));
  r.Set("output_documents", written);
  out << (flags.json ? r.Json() : r.Text());
  return kExitOk;
}

struct ScoreArgs {
  std::string gold;
  std::string sys;
  std::string metric = "lea";
  std::optional<std::string> slices;
  std::optional<std::string> report;
};

int RunScore(const ScoreArgs& args, const Config& config,
             const CommonFlags& flags, std::ostream& out) {
  if (args.metric != "lea") {
    throw UsageError("unsupported metric '" + args.metric + "'");
  }
  std::vector<std::string> wanted;
  if (args.slices) {
    for (auto s : Split(*args.slices, ',')) {
      std::string name(Trim(s));
      if (name != "binary" && name != "neo" && name != "other") {
        throw UsageError("unknown slice '" + name + "'");
      }
      wanted.push_back(name);
    }
  }
  const Corpus gold = ReadCorpus(args.gold);
  const Corpus sys = ReadCorpus(args.sys);
  const SlicedReport sliced =
      ScoreSlices(gold, sys, SliceSpec::BinaryVsNeo(BuildLexicon(config)));
  const ScoreReport& all = sliced.all;

  Report r;
  r.Set("metric", "lea");
  r.Set("documents", static_cast<int64_t>(gold.documents.size()));
  r.SetRatio("precision", all.precision());
  r.SetRatio("recall", all.recall());
  r.SetRatio("f1", all.f1());
  std::ostringstream table;
  table << std::left << std::setw(12) << "slice" << std::setw(12)
        << "precision" << std::setw(12) << "recall" << std::setw(12) << "f1"
        << "clusters\n";
  int64_t n_clusters = 0;
  for (const auto& s : sliced.slices) n_clusters += s.n_clusters;
  table << std::setw(12) << "all" << std::setw(12) << Decimal(all.precision())
        << std::setw(12) << Decimal(all.recall()) << std::setw(12)
        << Decimal(all.f1()) << n_clusters << "\n";
  for (const auto& name : wanted) {
    const SliceScore* s = sliced.Find(name);
    const std::string key = "slice." + name;
    r.SetBool(key + ".present", s->present());
    r.Set(key + ".clusters", s->n_clusters);
    table << std::setw(12) << name << std::setw(12) << "-";
    if (s->present()) {
      r.SetRatio(key + ".recall", s->recall());
      table << std::setw(12) << Decimal(s->recall());
    } else {
      table << std::setw(12) << "absent";
    }
    table << std::setw(12) << "-" << s->n_clusters << "\n";
  }

  const std::string structured = flags.json ? r.Json() : r.Text();
  if (args.report) {
    OutputBatch batch;
    batch.Add(*args.report, structured);
    batch.Commit();
    out << table.str();
  } else if (flags.json) {
    out << structured;
  } else {
    out << table.str() << "\n" << structured;
  }
  return kExitOk;
}

int RunMapScore(const std::string& instances_path, const std::string& sys_path,
                const CommonFlags& flags, std::ostream& out) {
  const auto instances = ParseMapInstances(ReadFile(instances_path));
  const Corpus sys = ReadCorpus(sys_path);
  const MapAccuracy acc = ComputeMapAccuracy(instances, sys);
  Report r;
  r.Set("instances", acc.total);
  r.Set("correct", acc.correct);
  r.SetRatio("accuracy", acc.accuracy());
  r.SetDecimal("wilson95_low", acc.wilson95.low);
  r.SetDecimal("wilson95_high", acc.wilson95.high);
  out << (flags.json ? r.Json() : r.Text());
  return kExitOk;
}

struct AdjudicateArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::optional<std::string> report;
  bool keep_singletons = false;
};

std::string LinkText(const MentionLink& l) {
  return "[" + std::to_string(l.first.start) + "," +
         std::to_string(l.first.end) + ")-[" + std::to_string(l.second.start) +
         "," + std::to_string(l.second.end) + ")";
}

std::string SpanText(const MentionSpan& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

int RunAdjudicate(const AdjudicateArgs& args, const Config& config,
                  const CommonFlags& flags, std::ostream& out) {
  if (args.inputs.size() != kAnnotatorCount) {
    throw UsageError("adjudicate takes exactly 3 annotation files");
  }
  std::vector<Corpus> corpora;
  for (const auto& path : args.inputs) corpora.push_back(ReadCorpus(path));

  Corpus merged;
  Report r;
  AdjudicateOptions opts;
  opts.keep_singletons = args.keep_singletons;
  for (const auto& doc : corpora[0].documents) {
    std::vector<AnnotationSet> sets;
    for (size_t a = 0; a < corpora.size(); ++a) {
      const Document* d = corpora[a].Find(doc.doc_id);
      if (d == nullptr) {
        throw Error(ErrorCode::kMissingDocument,
                    args.inputs[a] + " has no document '" + doc.doc_id + "'");
      }
      sets.push_back({args.inputs[a], *d});
    }
    AdjudicationResult result = MajorityMerge(sets, opts);
    const auto& rep = result.report;
    const std::string key = "doc." + doc.doc_id;
    r.Set(key + ".clusters",
          static_cast<int64_t>(result.merged.clusters.size()));
    r.Set(key + ".unanimous_links", static_cast<int64_t>(rep.unanimous.size()));
    r.Set(key + ".majority_links", static_cast<int64_t>(rep.majority.size()));
    r.Set(key + ".rejected_links", static_cast<int64_t>(rep.rejected.size()));
    r.Set(key + ".unresolved_mentions",
          static_cast<int64_t>(rep.unresolved.size()));
    r.Set(key + ".near_misses", static_cast<int64_t>(rep.near_misses.size()));
    auto votes = [&](const std::string& kind, const std::vector<LinkVote>& v) {
      for (size_t i = 0; i < v.size(); ++i) {
        std::string who;
        for (const auto& a : v[i].annotators) who += (who.empty() ? "" : ",") + a;
        r.Set(key + "." + kind + "." + std::to_string(i),
              LinkText(v[i].link) + " " + who);
      }
    };
    votes("unanimous", rep.unanimous);
    votes("majority", rep.majority);
    votes("rejected", rep.rejected);
    for (size_t i = 0; i < rep.unresolved.size(); ++i) {
      r.Set(key + ".unresolved." + std::to_string(i),
            SpanText(rep.unresolved[i]));
    }
    for (size_t i = 0; i < rep.near_misses.size(); ++i) {
      const auto& nm = rep.near_misses[i];
      r.Set(key + ".near_miss." + std::to_string(i),
            nm.annotator_a + ":" + SpanText(nm.span_a) + " " + nm.annotator_b +
                ":" + SpanText(nm.span_b));
    }
    merged.documents.push_back(std::move(result.merged));
  }

  const std::string structured = flags.json ? r.Json() : r.Text();
  OutputBatch batch;
  batch.Add(args.out, SerializeCorpus(merged, OutputFormat(config, args.out)));
  if (args.report) batch.Add(*args.report, structured);
  batch.Commit();
  if (!args.report) out << structured;
  return kExitOk;
}

}  // namespace

Environment ProcessEnvironment() {
  Environment env;
  for (const char* name : {"COREF_FORGE_CONFIG", "COREF_FORGE_LEXICON"}) {
    if (const char* v = std::getenv(name)) env[name] = v;
  }
  return env;
}

Config LoadConfig(const Environment& env) {
  Config config;
  if (auto it = env.find("COREF_FORGE_LEXICON");
      it != env.end() && !it->second.empty()) {
    config.lexicon_path = it->second;
  }
  if (auto it = env.find("COREF_FORGE_CONFIG");
      it != env.end() && !it->second.empty()) {
    ApplyConfigFile(it->second, config);
  }
  return config;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const Environment& env) {
  CLI::App app{"Coreference corpus toolkit: gender-inclusive augmentation, "
               "ablation, LEA scoring and adjudication",
               "coref-forge"};
  app.require_subcommand(1);
  CommonFlags flags;

  std::string in_path;
  auto* validate = app.add_subcommand("validate", "Check corpus invariants");
  validate->add_option("--in", in_path, "Input corpus")->required();

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--in", in_path, "Input corpus")->required();

  AugmentArgs aug;
  auto* augment = app.add_subcommand("augment", "Build an augmented corpus");
  augment->add_option("--in", aug.in, "Input corpus")->required();
  augment->add_option("--out", aug.out, "Output corpus")->required();
  augment->add_option("--plan", aug.plan, "Named plan: default5x");
  augment->add_option("--rules", aug.rules,
                      "Comma-separated copies, each a '+'-joined rule set, "
                      "e.g. r1,r2,r4:zie+r5");
  augment->add_flag("--keep-original", aug.keep_original,
                    "Also emit the unmodified documents");
  augment->add_flag("--skip-ineligible", aug.skip_ineligible,
                    "Let r4/r6 pass over documents without pronoun clusters");

  AblateArgs abl;
  auto* ablate = app.add_subcommand("ablate", "Write gender ablations");
  ablate->add_option("--in", abl.in, "Input corpus")->required();
  ablate->add_option("--out-dir", abl.out_dir, "Output directory")->required();
  ablate->add_flag("--suite", abl.suite, "Write all nine ablation variants");
  ablate->add_option("--combo", abl.combo, "One combo, e.g. name,sem");
  ablate->add_flag("--allow-drop", abl.allow_drop,
                   "Drop mentions that consist only of address terms");

  ScoreArgs sc;
  auto* score = app.add_subcommand("score", "LEA scoring");
  score->add_option("--gold", sc.gold, "Gold corpus")->required();
  score->add_option("--sys", sc.sys, "System corpus")->required();
  score->add_option("--metric", sc.metric, "Metric (lea)");
  score->add_option("--slices", sc.slices, "Slices: binary,neo,other");
  score->add_option("--report", sc.report, "Write the structured report here");

  std::string instances_path, map_sys;
  auto* map_score =
      app.add_subcommand("map-score", "Four-way pronoun resolution accuracy");
  map_score->add_option("--instances", instances_path, "Instance file")
      ->required();
  map_score->add_option("--sys", map_sys, "System corpus")->required();

  AdjudicateArgs adj;
  auto* adjudicate =
      app.add_subcommand("adjudicate", "Majority-merge three annotations");
  adjudicate->add_option("inputs", adj.inputs, "Three annotation files")
      ->required()
      ->expected(3);
  adjudicate->add_option("--out", adj.out, "Merged corpus")->required();
  adjudicate->add_option("--report", adj.report, "Adjudication report");
  adjudicate->add_flag("--keep-singletons", adj.keep_singletons,
                       "Keep majority-marked mentions without links");

  for (auto* sub : app.get_subcommands({})) AddCommonFlags(sub, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "coref-forge: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const Config config = Resolve(LoadConfig(env), flags);
    const Logger log{config.verbosity, &err};
    if (sub == validate) return RunValidate(in_path, flags, out);
    if (sub == stats) return RunStats(in_path, flags, out);
    if (sub == augment) return RunAugment(aug, config, flags, log, out);
    if (sub == ablate) return RunAblate(abl, config, flags, log, out);
    if (sub == score) return RunScore(sc, config, flags, out);
    if (sub == map_score) return RunMapScore(instances_path, map_sys, flags, out);
    if (sub == adjudicate) return RunAdjudicate(adj, config, flags, out);
  } catch (const UsageError& e) {
    err << "coref-forge " << sub->get_name() << ": " << e.what() << "\n"
        << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "coref-forge " << sub->get_name() << ": " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace coref_forge::cli
