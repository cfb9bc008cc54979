// voxkit/sentiment.hpp  --  lexicon-based polarity and subjectivity
//
// Copyright 2026  Voxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOXKIT_SENTIMENT_HPP_
#define VOXKIT_SENTIMENT_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"
#include "voxkit/sentiment_lexicon_data.hpp"
#include "voxkit/text.hpp"

namespace voxkit {

/// Entries with intensity != 1 are modifiers: they scale the next matched
/// term instead of contributing a score of their own.
struct SentimentEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  double intensity = 1.0;     // > 0

  bool is_modifier() const { return intensity != 1.0; }
};

struct SentimentLexicon {
  std::map<std::string, SentimentEntry> entries;

  static SentimentLexicon parse(std::istream& is) {
    SentimentLexicon lex;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      std::vector<std::string> f = split_fields(t);
      if (f.size() < 3 || f.size() > 4)
        throw ParseError("lexicon entry needs 3 or 4 fields", lineno);
      SentimentEntry e;
      if (!parse_double(f[1], &e.polarity) || !parse_double(f[2], &e.subjectivity))
        throw ParseError("bad numeric field", lineno);
      if (f.size() == 4 && !parse_double(f[3], &e.intensity))
        throw ParseError("bad intensity field", lineno);
      if (e.polarity < -1.0 || e.polarity > 1.0)
        throw ParseError("polarity out of [-1,1]", lineno);
      if (e.subjectivity < 0.0 || e.subjectivity > 1.0)
        throw ParseError("subjectivity out of [0,1]", lineno);
      if (!(e.intensity > 0.0)) throw ParseError("intensity must be > 0", lineno);
      lex.entries[to_lower(f[0])] = e;
    }
    return lex;
  }

  static SentimentLexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sentiment lexicon: " + path);
    return parse(in);
  }

  /// Bundled ~3k-entry English lexicon.
  static const SentimentLexicon& builtin() {
    static const SentimentLexicon lex = [] {
      std::istringstream is(detail::kDefaultSentimentLexicon);
      return parse(is);
    }();
    return lex;
  }
};

struct SentimentOptions {
  int negation_window = 3;        // tokens looked back for negators
  double negation_factor = -0.5;  // multiplies a negated term's polarity
  double classify_threshold = 0.0;
  std::set<std::string> negators = {
      "not",   "no",      "never",   "neither", "nor",      "cannot",
      "without", "hardly", "barely",  "scarcely", "n't",     "don't",
      "doesn't", "didn't", "isn't",   "aren't",  "wasn't",   "weren't",
      "won't",  "wouldn't", "can't",  "couldn't", "shouldn't", "ain't",
      "hasn't", "haven't", "hadn't",  "mustn't"};
};

struct SentimentScore {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  int matched_terms = 0;
};

/// Mean polarity/subjectivity over lexicon-matched terms. Negators within
/// the preceding window multiply a term's polarity by negation_factor;
/// modifier entries multiply by their intensity. Per-term values are
/// clamped back into bounds before averaging.
inline SentimentScore analyze_sentiment(const std::string& text,
                                        const SentimentLexicon& lex,
                                        const SentimentOptions& opt = {}) {
  TokenizedDoc doc = tokenize(text, {});
  SentimentScore score;
  double pol_sum = 0.0, subj_sum = 0.0;
  for (const auto& sentence : doc.sentences) {
    for (size_t i = 0; i < sentence.size(); ++i) {
      auto it = lex.entries.find(sentence[i].lower);
      if (it == lex.entries.end() || it->second.is_modifier()) continue;
      double pol = it->second.polarity;
      double subj = it->second.subjectivity;
      // modifiers apply within the sentence only
      size_t from = i >= static_cast<size_t>(opt.negation_window)
                        ? i - opt.negation_window
                        : 0;
      bool negated = false;
      for (size_t j = from; j < i; ++j) {
        if (opt.negators.count(sentence[j].lower)) negated = true;
        auto mod = lex.entries.find(sentence[j].lower);
        if (mod != lex.entries.end() && mod->second.is_modifier()) {
          pol *= mod->second.intensity;
          subj *= mod->second.intensity;
        }
      }
      if (negated) pol *= opt.negation_factor;
      pol = std::clamp(pol, -1.0, 1.0);
      subj = std::clamp(subj, 0.0, 1.0);
      pol_sum += pol;
      subj_sum += subj;
      ++score.matched_terms;
    }
  }
  if (score.matched_terms > 0) {
    score.polarity = pol_sum / score.matched_terms;
    score.subjectivity = subj_sum / score.matched_terms;
  }
  return score;
}

/// positive / negative / neutral against a symmetric threshold.
inline std::string classify(const SentimentScore& score, double threshold = 0.0) {
  if (threshold < 0) throw Error("classify: threshold must be >= 0");
  if (score.polarity > threshold) return "positive";
  if (score.polarity < -threshold) return "negative";
  return "neutral";
}

/// "13.67% (positive)" -- magnitude as a two-decimal percent, sign moved
/// into the label.
inline std::string format_polarity(const SentimentScore& score,
                                   double threshold = 0.0) {
  return format_fixed(std::abs(score.polarity) * 100.0, 2) + "% (" +
         classify(score, threshold) + ")";
}

/// "51.42%"
inline std::string format_subjectivity(const SentimentScore& score) {
  return format_fixed(score.subjectivity * 100.0, 2) + "%";
}

}  // namespace voxkit

#endif  // VOXKIT_SENTIMENT_HPP_
