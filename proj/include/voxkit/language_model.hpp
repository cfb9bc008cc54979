// voxkit/language_model.hpp  --  backoff n-gram models in ARPA text format
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

#ifndef VOXKIT_LANGUAGE_MODEL_HPP_
#define VOXKIT_LANGUAGE_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"

namespace voxkit {

inline const std::string kSentenceStart = "<s>";
inline const std::string kSentenceEnd = "</s>";
inline const std::string kUnknownWord = "<unk>";

/// log10 probability given to events outside the model entirely
/// (OOV with no <unk> entry) and to <s> as a predicted token.
constexpr double kLogProbFloor = -99.0;

struct NgramEntry {
  double log_prob = 0.0;    // log10
  double backoff = 0.0;     // log10; meaningful only when has_backoff
  bool has_backoff = false;
};

/// Backoff n-gram tables. tables[n-1] maps token sequences to entries;
/// keys normally hold n tokens, but sample files in the wild append a
/// trailing </s> to a section's n-grams and those keys are kept verbatim.
struct ArpaModel {
  int order = 0;
  std::vector<std::map<std::vector<std::string>, NgramEntry>> tables;
  std::set<std::string> vocabulary;  // single-token keys of the 1-gram table

  const NgramEntry* find(const std::vector<std::string>& tokens) const {
    for (const auto& table : tables) {
      auto it = table.find(tokens);
      if (it != table.end()) return &it->second;
    }
    return nullptr;
  }
  const NgramEntry* find_order(int n, const std::vector<std::string>& tokens) const {
    if (n < 1 || n > order) return nullptr;
    auto it = tables[n - 1].find(tokens);
    return it == tables[n - 1].end() ? nullptr : &it->second;
  }
  size_t total_entries() const {
    size_t n = 0;
    for (const auto& t : tables) n += t.size();
    return n;
  }
};

// ---------------------------------------------------------------------------
// parsing

namespace detail {

inline bool looks_numeric(const std::string& s) {
  double v;
  return parse_double(s, &v);
}

}  // namespace detail

/// Accepts tab- or space-separated fields. Entry lines in the \N-grams:
/// section are `log10prob tokens... [backoff]`; a trailing </s> beyond the
/// section's order is tolerated (it appears in sample models).
inline ArpaModel parse_arpa(std::istream& is) {
  std::vector<std::string> lines;
  {
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }

  size_t i = 0;
  auto at_end = [&] { return i >= lines.size(); };
  while (!at_end() && trim(lines[i]) != "\\data\\") ++i;
  if (at_end()) throw ParseError("missing \\data\\ header");
  ++i;

  std::map<int, long> declared;
  for (; !at_end(); ++i) {
    std::string t = trim(lines[i]);
    if (t.empty()) continue;
    if (t[0] == '\\') break;  // first section marker
    // "ngram N=count"
    std::vector<std::string> f = split_fields(t);
    if (f.size() != 2 || f[0] != "ngram")
      throw ParseError("expected 'ngram N=count', got '" + t + "'",
                       static_cast<int>(i + 1));
    size_t eq = f[1].find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'ngram N=count', got '" + t + "'",
                       static_cast<int>(i + 1));
    int n = std::stoi(f[1].substr(0, eq));
    long c = std::stol(f[1].substr(eq + 1));
    if (n < 1 || c < 0)
      throw ParseError("bad ngram declaration '" + t + "'", static_cast<int>(i + 1));
    declared[n] = c;
  }
  if (declared.empty()) throw ParseError("no 'ngram N=count' declarations");

  ArpaModel model;
  model.order = declared.rbegin()->first;
  model.tables.resize(model.order);

  bool saw_end = false;
  while (!at_end()) {
    std::string marker = trim(lines[i]);
    if (marker.empty()) {
      ++i;
      continue;
    }
    if (marker == "\\end\\") {
      saw_end = true;
      break;
    }
    int n = 0;
    if (std::sscanf(marker.c_str(), "\\%d-grams:", &n) != 1 || n < 1 ||
        n > model.order)
      throw ParseError("unexpected section marker '" + marker + "'",
                       static_cast<int>(i + 1));
    ++i;
    auto& table = model.tables[n - 1];
    for (; !at_end(); ++i) {
      std::string t = trim(lines[i]);
      if (t.empty()) continue;
      if (t[0] == '\\') break;  // next section marker or the end marker
      const int lineno = static_cast<int>(i + 1);
      std::vector<std::string> f = split_fields(t);
      if (static_cast<int>(f.size()) < n + 1)
        throw ParseError("n-gram entry too short: '" + t + "'", lineno);
      NgramEntry e;
      if (!parse_double(f[0], &e.log_prob))
        throw ParseError("malformed probability '" + f[0] + "'", lineno);
      std::vector<std::string> rest(f.begin() + 1, f.end());
      std::vector<std::string> tokens;
      const size_t k = rest.size();
      if (k == static_cast<size_t>(n)) {
        tokens = rest;
      } else if (k == static_cast<size_t>(n) + 1) {
        if (detail::looks_numeric(rest.back())) {
          parse_double(rest.back(), &e.backoff);
          e.has_backoff = true;
          tokens.assign(rest.begin(), rest.end() - 1);
        } else if (rest.back() == kSentenceEnd) {
          tokens = rest;  // trailing </s> beyond the section order
        } else {
          throw ParseError("trailing field '" + rest.back() +
                               "' is neither a backoff weight nor </s>",
                           lineno);
        }
      } else if (k == static_cast<size_t>(n) + 2 && rest[n] == kSentenceEnd &&
                 detail::looks_numeric(rest.back())) {
        parse_double(rest.back(), &e.backoff);
        e.has_backoff = true;
        tokens.assign(rest.begin(), rest.end() - 1);
      } else {
        throw ParseError("wrong field count for a " + std::to_string(n) +
                             "-gram: '" + t + "'",
                         lineno);
      }
      if (!table.emplace(std::move(tokens), e).second)
        throw ParseError("duplicate n-gram '" + t + "'", lineno);
    }
  }
  if (!saw_end) throw ParseError("missing \\end\\ marker");

  for (const auto& [n, count] : declared) {
    long actual = static_cast<long>(model.tables[n - 1].size());
    if (actual != count)
      throw ParseError("header declares ngram " + std::to_string(n) + "=" +
                       std::to_string(count) + " but section has " +
                       std::to_string(actual) + " entries");
  }
  for (const auto& [word_seq, entry] : model.tables[0])
    if (word_seq.size() == 1) model.vocabulary.insert(word_seq[0]);
  return model;
}

inline ArpaModel parse_arpa(const std::string& text) {
  std::istringstream is(text);
  return parse_arpa(is);
}

inline ArpaModel load_arpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ARPA file: " + path);
  return parse_arpa(in);
}

// ---------------------------------------------------------------------------
// writing

/// Deterministic: sections in order, entries sorted lexicographically,
/// 4-decimal fixed-point values, tab separators.
inline void write_arpa(const ArpaModel& model, std::ostream& os) {
  os << "\\data\\\n";
  for (int n = 1; n <= model.order; ++n)
    os << "ngram " << n << "=" << model.tables[n - 1].size() << "\n";
  for (int n = 1; n <= model.order; ++n) {
    if (model.tables[n - 1].empty() && n > 1) continue;
    os << "\n\\" << n << "-grams:\n";
    for (const auto& [tokens, e] : model.tables[n - 1]) {
      os << format_fixed(e.log_prob, 4) << '\t' << join(tokens, " ");
      if (e.has_backoff) os << '\t' << format_fixed(e.backoff, 4);
      os << '\n';
    }
  }
  os << "\n\\end\\\n";
}

inline std::string write_arpa(const ArpaModel& model) {
  std::ostringstream ss;
  write_arpa(model, ss);
  return ss.str();
}

// ---------------------------------------------------------------------------
// scoring

namespace detail {

inline double score_backoff(const ArpaModel& m,
                            std::vector<std::string> context,
                            const std::string& word) {
  if (context.empty()) {
    if (const NgramEntry* e = m.find_order(1, {word})) return e->log_prob;
    if (const NgramEntry* e = m.find_order(1, {kUnknownWord})) return e->log_prob;
    return kLogProbFloor;
  }
  std::vector<std::string> key = context;
  key.push_back(word);
  if (const NgramEntry* e = m.find_order(static_cast<int>(key.size()), key))
    return e->log_prob;
  double bow = 0.0;
  if (const NgramEntry* c = m.find_order(static_cast<int>(context.size()), context))
    if (c->has_backoff) bow = c->backoff;
  context.erase(context.begin());
  return bow + score_backoff(m, std::move(context), word);
}

inline std::string map_oov(const ArpaModel& m, const std::string& word) {
  return m.vocabulary.count(word) ? word : kUnknownWord;
}

}  // namespace detail

/// log10 P(word | context) with longest-match backoff. OOV words (in the
/// context or as the predicted word) are mapped to <unk> first.
inline double score_word(const ArpaModel& model,
                         const std::vector<std::string>& context,
                         const std::string& word) {
  std::vector<std::string> ctx;
  size_t start = context.size() > static_cast<size_t>(model.order - 1)
                     ? context.size() - (model.order - 1)
                     : 0;
  for (size_t i = start; i < context.size(); ++i)
    ctx.push_back(detail::map_oov(model, context[i]));
  return detail::score_backoff(model, std::move(ctx),
                               detail::map_oov(model, word));
}

/// Sum of per-position log10 probabilities. A leading <s> conditions the
/// next word but is not itself scored; an empty sequence scores 0.
inline double score_sequence(const ArpaModel& model,
                             const std::vector<std::string>& words) {
  double total = 0.0;
  std::vector<std::string> context;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i == 0 && words[i] == kSentenceStart) {
      context.push_back(words[i]);
      continue;
    }
    total += score_word(model, context, words[i]);
    context.push_back(words[i]);
  }
  return total;
}

/// 10^(-total log10 prob / tokens), predicting </s> once per sentence.
inline double perplexity(const ArpaModel& model,
                         const std::vector<std::vector<std::string>>& sentences) {
  if (sentences.empty()) throw Error("perplexity: empty corpus");
  double total_lp = 0.0;
  long tokens = 0;
  for (const auto& sent : sentences) {
    std::vector<std::string> wrapped;
    wrapped.reserve(sent.size() + 2);
    wrapped.push_back(kSentenceStart);
    wrapped.insert(wrapped.end(), sent.begin(), sent.end());
    wrapped.push_back(kSentenceEnd);
    total_lp += score_sequence(model, wrapped);
    tokens += static_cast<long>(sent.size()) + 1;
  }
  return std::pow(10.0, -total_lp / static_cast<double>(tokens));
}

// ---------------------------------------------------------------------------
// training: maximum-likelihood ratios with absolute discounting

/// Counts of 1..n grams over <s>-wrapped sentences.
struct CountTable {
  int order = 0;
  std::vector<std::map<std::vector<std::string>, int64_t>> counts;

  static CountTable build(const std::vector<std::vector<std::string>>& sentences,
                          int order) {
    CountTable ct;
    ct.order = order;
    ct.counts.resize(order);
    for (const auto& sent : sentences) {
      std::vector<std::string> t;
      t.reserve(sent.size() + 2);
      t.push_back(kSentenceStart);
      for (const auto& w : sent) {
        if (w == kSentenceStart || w == kSentenceEnd || w == kUnknownWord)
          throw Error("reserved token '" + w + "' in training corpus");
        if (w.empty()) throw Error("empty token in training corpus");
        t.push_back(w);
      }
      t.push_back(kSentenceEnd);
      for (int n = 1; n <= order; ++n)
        for (size_t i = 0; i + n <= t.size(); ++i)
          ++ct.counts[n - 1][{t.begin() + i, t.begin() + i + n}];
    }
    return ct;
  }
};

/// Absolute discounting: every seen count is reduced by `discount` and the
/// freed mass becomes the context's backoff weight (for unigrams it becomes
/// the <unk> probability), so conditionals sum to one over the vocabulary.
inline ArpaModel train_ngram(const std::vector<std::vector<std::string>>& sentences,
                             int order, double discount = 0.5) {
  if (order < 1) throw Error("train_ngram: order must be >= 1");
  if (sentences.empty()) throw Error("train_ngram: empty corpus");
  if (!(discount > 0.0 && discount < 1.0))
    throw Error("train_ngram: discount must be in (0,1)");

  const CountTable ct = CountTable::build(sentences, order);

  ArpaModel model;
  model.order = order;
  model.tables.resize(order);

  // unigrams: events exclude <s>, freed mass goes to <unk>
  int64_t num_events = 0;
  int64_t distinct = 0;
  for (const auto& [toks, c] : ct.counts[0]) {
    if (toks[0] == kSentenceStart) continue;
    num_events += c;
    ++distinct;
  }
  if (num_events == 0) throw Error("train_ngram: no events in corpus");
  for (const auto& [toks, c] : ct.counts[0]) {
    NgramEntry e;
    if (toks[0] == kSentenceStart)
      e.log_prob = kLogProbFloor;
    else
      e.log_prob = std::log10((static_cast<double>(c) - discount) / num_events);
    model.tables[0][toks] = e;
  }
  {
    NgramEntry unk;
    unk.log_prob =
        std::log10(discount * static_cast<double>(distinct) / num_events);
    model.tables[0][{kUnknownWord}] = unk;
  }

  // higher-order probabilities straight from count ratios
  for (int n = 2; n <= order; ++n) {
    std::map<std::vector<std::string>, int64_t> denom;
    for (const auto& [toks, c] : ct.counts[n - 1])
      denom[{toks.begin(), toks.end() - 1}] += c;
    for (const auto& [toks, c] : ct.counts[n - 1]) {
      NgramEntry e;
      int64_t d = denom.at({toks.begin(), toks.end() - 1});
      e.log_prob =
          std::log10((static_cast<double>(c) - discount) / static_cast<double>(d));
      model.tables[n - 1][toks] = e;
    }
  }

  // backoff weights bottom-up; contexts are entries with continuations
  for (int k = 1; k < order; ++k) {
    std::map<std::vector<std::string>, std::vector<std::string>> continuations;
    std::map<std::vector<std::string>, int64_t> denom;
    for (const auto& [toks, c] : ct.counts[k]) {  // (k+1)-grams
      std::vector<std::string> ctx(toks.begin(), toks.end() - 1);
      continuations[ctx].push_back(toks.back());
      denom[ctx] += c;
    }
    for (const auto& [ctx, words] : continuations) {
      auto it = model.tables[k - 1].find(ctx);
      if (it == model.tables[k - 1].end()) continue;  // cannot happen for k<=order-1
      double leftover =
          discount * static_cast<double>(words.size()) / static_cast<double>(denom[ctx]);
      std::vector<std::string> shorter(ctx.begin() + 1, ctx.end());
      double missing = 1.0;
      for (const auto& w : words)
        missing -= std::pow(10.0, detail::score_backoff(model, shorter, w));
      if (missing <= 0.0)
        throw Error("train_ngram: degenerate backoff mass for context '" +
                    join(ctx, " ") + "'");
      it->second.backoff = std::log10(leftover / missing);
      it->second.has_backoff = true;
    }
  }

  for (const auto& [word_seq, entry] : model.tables[0])
    if (word_seq.size() == 1) model.vocabulary.insert(word_seq[0]);
  return model;
}

}  // namespace voxkit

#endif  // VOXKIT_LANGUAGE_MODEL_HPP_
