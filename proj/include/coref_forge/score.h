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

// LEA (link-based entity-aware) coreference scoring, per-slice recall, and
// four-way pronoun-resolution accuracy.
//
// For key clusters K and response clusters R:
//
//   recall    = sum_k |k| * (sum_r link(k & r) / link(k)) / sum_k |k|
//   precision = the same with K and R swapped
//
// where link(e) = |e|(|e|-1)/2. A singleton has one self-link, resolved
// only by an identical singleton on the other side. Everything is computed
// with exact rationals.

#ifndef COREF_FORGE_SCORE_H_
#define COREF_FORGE_SCORE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coref_forge/document.h"
#include "coref_forge/error.h"
#include "coref_forge/lexicon.h"
#include "coref_forge/text.h"

namespace coref_forge {

using Rational = boost::multiprecision::cpp_rational;

inline std::string RationalString(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

// Ratio with 0/0 read as 0.
inline Rational SafeDivide(const Rational& num, const Rational& den) {
  return den == 0 ? Rational(0) : Rational(num / den);
}

// Weighted numerator and denominator of one LEA direction.
struct LeaTerms {
  Rational numerator = 0;
  Rational denominator = 0;

  LeaTerms& operator+=(const LeaTerms& o) {
    numerator += o.numerator;
    denominator += o.denominator;
    return *this;
  }
  Rational value() const { return SafeDivide(numerator, denominator); }
};

struct ScoreReport {
  LeaTerms recall_terms;
  LeaTerms precision_terms;

  Rational recall() const { return recall_terms.value(); }
  Rational precision() const { return precision_terms.value(); }
  Rational f1() const {
    const Rational p = precision(), r = recall();
    if (p + r == 0) return 0;
    return 2 * p * r / (p + r);
  }

  ScoreReport& operator+=(const ScoreReport& o) {
    recall_terms += o.recall_terms;
    precision_terms += o.precision_terms;
    return *this;
  }
};

namespace internal {

inline int64_t LinkCount(int64_t size) {
  return size == 1 ? 1 : size * (size - 1) / 2;
}

// One cluster's contribution to the LEA numerator of `keys` against
// `responses`, where owner maps each response span to its cluster index.
inline Rational ResolvedFraction(
    const Cluster& key, const std::vector<Cluster>& responses,
    const std::map<MentionSpan, size_t>& owner) {
  const auto size = static_cast<int64_t>(key.mentions.size());
  if (size == 1) {
    const auto it = owner.find(key.mentions.front());
    const bool resolved =
        it != owner.end() && responses[it->second].mentions.size() == 1;
    return resolved ? 1 : 0;
  }
  std::map<size_t, int64_t> overlap;
  for (const auto& m : key.mentions) {
    if (const auto it = owner.find(m); it != owner.end()) ++overlap[it->second];
  }
  int64_t resolved = 0;
  for (const auto& [r, n] : overlap) resolved += n * (n - 1) / 2;
  return Rational(resolved, LinkCount(size));
}

inline std::map<MentionSpan, size_t> SpanOwners(
    const std::vector<Cluster>& clusters) {
  std::map<MentionSpan, size_t> owner;
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (const auto& m : clusters[i].mentions) owner.emplace(m, i);
  }
  return owner;
}

inline void CheckSameTokens(const Document& gold, const Document& system) {
  if (gold.token_count() != system.token_count()) {
    throw Error(ErrorCode::kTokenMismatch,
                "doc " + gold.doc_id + ": " + std::to_string(gold.token_count()) +
                    " gold tokens vs " + std::to_string(system.token_count()) +
                    " system tokens");
  }
  for (int64_t i = 0; i < gold.token_count(); ++i) {
    if (gold.tokens[i].text != system.tokens[i].text) {
      throw Error(ErrorCode::kTokenMismatch,
                  "doc " + gold.doc_id + " token " + std::to_string(i) + ": '" +
                      gold.tokens[i].text + "' vs '" + system.tokens[i].text +
                      "'");
    }
  }
}

}  // namespace internal

// LEA terms of `keys` scored against `responses` (recall direction).
inline LeaTerms LeaDirection(const std::vector<Cluster>& keys,
                             const std::vector<Cluster>& responses) {
  const auto owner = internal::SpanOwners(responses);
  LeaTerms t;
  for (const auto& k : keys) {
    if (k.mentions.empty()) continue;
    const auto size = static_cast<int64_t>(k.mentions.size());
    t.numerator += size * internal::ResolvedFraction(k, responses, owner);
    t.denominator += size;
  }
  return t;
}

inline ScoreReport Lea(const Document& gold, const Document& system) {
  internal::CheckSameTokens(gold, system);
  return ScoreReport{LeaDirection(gold.clusters, system.clusters),
                     LeaDirection(system.clusters, gold.clusters)};
}

// Documents are paired by doc_id; every gold document needs a system
// counterpart. Terms are summed over documents.
inline ScoreReport Lea(const Corpus& gold, const Corpus& system) {
  ScoreReport total;
  for (const auto& g : gold.documents) {
    const Document* s = system.Find(g.doc_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kMissingDocument,
                  "system output has no document '" + g.doc_id + "'");
    }
    total += Lea(g, *s);
  }
  return total;
}

// Partition of gold clusters into named slices.
struct SliceSpec {
  // Slice names in report order. Labels returned by `slicer` that are not
  // listed are appended in first-seen order.
  std::vector<std::string> labels;
  std::function<std::string(const Document&, const Cluster&)> slicer;

  static SliceSpec All() {
    return {{"all"}, [](const Document&, const Cluster&) { return "all"; }};
  }

  // "binary" clusters hold a masculine/feminine pronoun and no neopronoun;
  // "neo" clusters hold any neopronoun (they win ties); everything else is
  // "other". Pronouns are single-token mentions. The lexicon is captured by
  // value.
  static SliceSpec BinaryVsNeo(GenderLexicon lex) {
    return {{"binary", "neo", "other"},
            [lex = std::move(lex)](const Document& doc, const Cluster& c) {
              bool binary = false, neo = false;
              for (const auto& m : c.mentions) {
                if (m.size() != 1) continue;
                const auto info = lex.Classify(doc.tokens[m.start].text);
                if (!info || info->category != TokenCategory::kPronoun ||
                    !info->gender_class) {
                  continue;
                }
                const GenderClass& cls = *info->gender_class;
                if (cls.IsBinary()) {
                  binary = true;
                } else if (cls != GenderClass::NeutralThey() &&
                           cls != GenderClass("it")) {
                  neo = true;
                }
              }
              if (neo) return std::string("neo");
              if (binary) return std::string("binary");
              return std::string("other");
            }};
  }
};

struct SliceScore {
  std::string label;
  int64_t n_clusters = 0;
  LeaTerms recall_terms;

  bool present() const { return n_clusters > 0; }
  Rational recall() const { return recall_terms.value(); }
};

struct SlicedReport {
  // Precision is only meaningful here: it does not decompose over gold
  // clusters.
  ScoreReport all;
  std::vector<SliceScore> slices;

  const SliceScore* Find(std::string_view label) const {
    for (const auto& s : slices) {
      if (s.label == label) return &s;
    }
    return nullptr;
  }
};

namespace internal {

inline void AccumulateSlices(const Document& gold, const Document& system,
                             const SliceSpec& spec, SlicedReport& report) {
  CheckSameTokens(gold, system);
  report.all += Lea(gold, system);
  for (const auto& c : gold.clusters) {
    const std::string label = spec.slicer(gold, c);
    SliceScore* slot = nullptr;
    for (auto& s : report.slices) {
      if (s.label == label) slot = &s;
    }
    if (slot == nullptr) {
      report.slices.push_back(SliceScore{label, 0, {}});
      slot = &report.slices.back();
    }
    ++slot->n_clusters;
    slot->recall_terms += LeaDirection({c}, system.clusters);
  }
}

inline SlicedReport EmptySlices(const SliceSpec& spec) {
  SlicedReport r;
  for (const auto& l : spec.labels) r.slices.push_back(SliceScore{l, 0, {}});
  return r;
}

}  // namespace internal

// Per-slice LEA recall: each slice's gold clusters against the full system
// response.
inline SlicedReport ScoreSlices(const Document& gold, const Document& system,
                                const SliceSpec& spec) {
  SlicedReport r = internal::EmptySlices(spec);
  internal::AccumulateSlices(gold, system, spec, r);
  return r;
}

inline SlicedReport ScoreSlices(const Corpus& gold, const Corpus& system,
                                const SliceSpec& spec) {
  SlicedReport r = internal::EmptySlices(spec);
  for (const auto& g : gold.documents) {
    const Document* s = system.Find(g.doc_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kMissingDocument,
                  "system output has no document '" + g.doc_id + "'");
    }
    internal::AccumulateSlices(g, *s, spec, r);
  }
  return r;
}

// ---- Pronoun resolution (person A / B / both / neither) ----

enum class MapLabel { kA, kB, kBoth, kNeither };

inline std::string_view MapLabelName(MapLabel l) {
  switch (l) {
    case MapLabel::kA: return "A";
    case MapLabel::kB: return "B";
    case MapLabel::kBoth: return "Both";
    case MapLabel::kNeither: return "Neither";
  }
  return "?";
}

inline std::optional<MapLabel> ParseMapLabel(std::string_view s) {
  const std::string l = AsciiLower(Trim(s));
  if (l == "a") return MapLabel::kA;
  if (l == "b") return MapLabel::kB;
  if (l == "both") return MapLabel::kBoth;
  if (l == "neither") return MapLabel::kNeither;
  return std::nullopt;
}

struct MapInstance {
  std::string doc_id;
  MentionSpan pronoun;
  std::vector<MentionSpan> a_mentions;
  std::vector<MentionSpan> b_mentions;
  MapLabel gold_label = MapLabel::kNeither;
};

// Label implied by the system cluster that holds the pronoun span.
inline MapLabel ClassifyMapInstance(const Document& system,
                                    const MapInstance& inst) {
  for (const auto& c : system.clusters) {
    if (!std::binary_search(c.mentions.begin(), c.mentions.end(),
                            inst.pronoun)) {
      continue;
    }
    auto hits = [&](const std::vector<MentionSpan>& targets) {
      for (const auto& t : targets) {
        if (t != inst.pronoun &&
            std::binary_search(c.mentions.begin(), c.mentions.end(), t)) {
          return true;
        }
      }
      return false;
    };
    const bool a = hits(inst.a_mentions);
    const bool b = hits(inst.b_mentions);
    if (a && b) return MapLabel::kBoth;
    if (a) return MapLabel::kA;
    if (b) return MapLabel::kB;
    return MapLabel::kNeither;
  }
  return MapLabel::kNeither;
}

struct Interval {
  double low = 0;
  double high = 0;
};

// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

inline Interval WilsonInterval(int64_t successes, int64_t n, double z = kZ95) {
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct MapAccuracy {
  int64_t correct = 0;
  int64_t total = 0;
  Interval wilson95;

  Rational accuracy() const { return Rational(correct, total); }
};

inline void CheckMapInstance(const MapInstance& inst, const Document& doc) {
  auto in_range = [&](const MentionSpan& s) {
    return s.start >= 0 && s.start < s.end && s.end <= doc.token_count();
  };
  bool ok = in_range(inst.pronoun);
  for (const auto& s : inst.a_mentions) ok = ok && in_range(s);
  for (const auto& s : inst.b_mentions) ok = ok && in_range(s);
  if (!ok) {
    throw Error(ErrorCode::kMalformedInput,
                "instance for doc " + inst.doc_id + " has a span outside [0," +
                    std::to_string(doc.token_count()) + ")");
  }
}

inline MapAccuracy ComputeMapAccuracy(const std::vector<MapInstance>& instances,
                                      const Corpus& system) {
  if (instances.empty()) {
    throw Error(ErrorCode::kEmptySet, "no instances to score");
  }
  MapAccuracy acc;
  for (const auto& inst : instances) {
    const Document* doc = system.Find(inst.doc_id);
    if (doc == nullptr) {
      throw Error(ErrorCode::kMissingDocument,
                  "system output has no document '" + inst.doc_id + "'");
    }
    CheckMapInstance(inst, *doc);
    ++acc.total;
    if (ClassifyMapInstance(*doc, inst) == inst.gold_label) ++acc.correct;
  }
  acc.wilson95 = WilsonInterval(acc.correct, acc.total);
  return acc;
}

// Instance file: one tab-separated instance per line,
//   doc_id  pronoun  a_spans  b_spans  label
// where a span is "start:end" (half-open), span lists are comma-separated or
// "-" when empty, and label is A, B, Both or Neither. '#' lines are comments.
inline std::vector<MapInstance> ParseMapInstances(std::string_view text) {
  std::vector<MapInstance> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string at = "instance line " + std::to_string(line_no);

    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedInput, at + ": " + why);
    };
    auto parse_span = [&](std::string_view s) {
      const auto parts = Split(Trim(s), ':');
      MentionSpan span;
      if (parts.size() != 2 || !ParseNonNegativeInt(parts[0], span.start) ||
          !ParseNonNegativeInt(parts[1], span.end) ||
          span.start >= span.end) {
        throw bad("bad span '" + std::string(s) + "'");
      }
      return span;
    };
    auto parse_list = [&](std::string_view s) {
      std::vector<MentionSpan> spans;
      if (Trim(s) == "-") return spans;
      for (auto piece : Split(s, ',')) spans.push_back(parse_span(piece));
      std::sort(spans.begin(), spans.end());
      return spans;
    };

    const auto fields = Split(line, '\t');
    if (fields.size() != 5) throw bad("expected 5 tab-separated fields");
    MapInstance inst;
    inst.doc_id = std::string(Trim(fields[0]));
    inst.pronoun = parse_span(fields[1]);
    inst.a_mentions = parse_list(fields[2]);
    inst.b_mentions = parse_list(fields[3]);
    const auto label = ParseMapLabel(fields[4]);
    if (!label) throw bad("unknown label '" + std::string(fields[4]) + "'");
    inst.gold_label = *label;

    auto contains = [](const std::vector<MentionSpan>& v, const MentionSpan& s) {
      return std::binary_search(v.begin(), v.end(), s);
    };
    if (contains(inst.a_mentions, inst.pronoun) ||
        contains(inst.b_mentions, inst.pronoun)) {
      throw bad("pronoun span is listed as a candidate mention");
    }
    if (inst.gold_label != MapLabel::kBoth) {
      for (const auto& s : inst.a_mentions) {
        if (contains(inst.b_mentions, s)) {
          throw bad("A and B share a span but the label is not Both");
        }
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_SCORE_H_
