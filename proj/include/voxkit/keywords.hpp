// voxkit/keywords.hpp  --  RAKE, TextRank, TopicRank, YAKE and TF-IDF
// keyword extraction over tokenized transcripts
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

#ifndef VOXKIT_KEYWORDS_HPP_
#define VOXKIT_KEYWORDS_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "voxkit/common.hpp"
#include "voxkit/text.hpp"

namespace voxkit {

struct KeywordResult {
  std::string phrase;
  double score = 0.0;
  int rank = 0;  // 1-based, dense
  std::string algorithm;
};

namespace detail {

/// A maximal run of non-stopword tokens, not interrupted by punctuation.
struct CandidateRun {
  std::vector<std::string> words;  // lowercase member words
  int sentence = 0;
  int first_pos = 0;    // global token position of the first member
  size_t offset = 0;    // character offset, for tie-breaking
};

inline std::vector<CandidateRun> candidate_runs(const TokenizedDoc& doc) {
  std::vector<CandidateRun> runs;
  int base = 0;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    const auto& sent = doc.sentences[s];
    size_t i = 0;
    while (i < sent.size()) {
      if (sent[i].stop) {
        ++i;
        continue;
      }
      CandidateRun run;
      run.sentence = s;
      run.first_pos = base + static_cast<int>(i);
      run.offset = sent[i].offset;
      run.words.push_back(sent[i].lower);
      size_t j = i + 1;
      while (j < sent.size() && !sent[j].stop && sent[j].joins_previous) {
        run.words.push_back(sent[j].lower);
        ++j;
      }
      runs.push_back(std::move(run));
      i = j;
    }
    base += static_cast<int>(sent.size());
  }
  return runs;
}

struct Ranked {
  std::string phrase;
  double score;
  size_t first_offset;
};

/// Sorts, applies the shared tie-break (earlier first occurrence, then
/// lexicographic) and assigns dense 1-based ranks.
inline std::vector<KeywordResult> finalize(std::vector<Ranked> items,
                                           bool higher_is_better,
                                           const std::string& algorithm) {
  std::stable_sort(items.begin(), items.end(), [&](const Ranked& a, const Ranked& b) {
    if (a.score != b.score) return higher_is_better ? a.score > b.score
                                                    : a.score < b.score;
    if (a.first_offset != b.first_offset) return a.first_offset < b.first_offset;
    return a.phrase < b.phrase;
  });
  std::vector<KeywordResult> out;
  out.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i)
    out.push_back(KeywordResult{items[i].phrase, items[i].score,
                                static_cast<int>(i + 1), algorithm});
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RAKE

struct RakeOptions {
  // "adjoining stopword" phrases must appear more than twice...
  int adjoined_min_count = 3;
  // ...and score at least the median candidate score
  bool adjoined_phrases = true;
};

/// Word score = deg(w)/freq(w) over the co-occurrence graph of candidate
/// phrases; phrase score sums its member word scores.
inline std::vector<KeywordResult> extract_rake(const TokenizedDoc& doc,
                                               const RakeOptions& opt = {}) {
  std::vector<detail::CandidateRun> runs = detail::candidate_runs(doc);
  std::map<std::string, double> freq, deg;
  for (const auto& run : runs)
    for (const auto& w : run.words) {
      freq[w] += 1.0;
      deg[w] += static_cast<double>(run.words.size());
    }
  auto word_score = [&](const std::string& w) { return deg.at(w) / freq.at(w); };

  std::map<std::string, detail::Ranked> phrases;
  for (const auto& run : runs) {
    double score = 0.0;
    for (const auto& w : run.words) score += word_score(w);
    std::string key = join(run.words, " ");
    auto it = phrases.find(key);
    if (it == phrases.end())
      phrases[key] = detail::Ranked{key, score, run.offset};
  }

  // adjoining-stopword phrases: candidate, stopwords, candidate, all
  // contiguous; admitted when frequent enough and scoring at or above the
  // median regular candidate
  if (opt.adjoined_phrases && !phrases.empty()) {
    std::vector<double> scores;
    scores.reserve(phrases.size());
    for (const auto& [_, r] : phrases) scores.push_back(r.score);
    std::sort(scores.begin(), scores.end());
    double median = scores[scores.size() / 2];

    struct Joined {
      int count = 0;
      double score = 0.0;
      size_t offset = 0;
    };
    std::map<std::string, Joined> joined;
    for (const auto& sent : doc.sentences) {
      for (size_t i = 0; i < sent.size(); ++i) {
        if (sent[i].stop) continue;
        // only maximal runs qualify as the left candidate
        if (i > 0 && !sent[i - 1].stop && sent[i].joins_previous) continue;
        // candidate run A
        size_t a_end = i;
        while (a_end + 1 < sent.size() && !sent[a_end + 1].stop &&
               sent[a_end + 1].joins_previous)
          ++a_end;
        // stopword run S
        size_t s_end = a_end;
        while (s_end + 1 < sent.size() && sent[s_end + 1].stop &&
               sent[s_end + 1].joins_previous)
          ++s_end;
        if (s_end == a_end) continue;
        // candidate run B
        size_t b_end = s_end;
        while (b_end + 1 < sent.size() && !sent[b_end + 1].stop &&
               sent[b_end + 1].joins_previous)
          ++b_end;
        if (b_end == s_end) continue;
        std::vector<std::string> words;
        double score = 0.0;
        for (size_t k = i; k <= b_end; ++k) {
          words.push_back(sent[k].lower);
          if (!sent[k].stop) score += word_score(sent[k].lower);
        }
        auto& j = joined[join(words, " ")];
        ++j.count;
        j.score = score;
        if (j.count == 1) j.offset = sent[i].offset;
      }
    }
    for (const auto& [key, j] : joined)
      if (j.count >= opt.adjoined_min_count && j.score >= median &&
          !phrases.count(key))
        phrases[key] = detail::Ranked{key, j.score, j.offset};
  }

  std::vector<detail::Ranked> items;
  items.reserve(phrases.size());
  for (const auto& [_, r] : phrases) items.push_back(r);
  return detail::finalize(std::move(items), /*higher_is_better=*/true, "rake");
}

// ---------------------------------------------------------------------------
// TextRank

struct TextRankOptions {
  int window = 2;          // co-occurrence span in token positions
  double damping = 0.85;
  double epsilon = 1e-6;
  int max_iterations = 100;
  double keep_fraction = 1.0 / 3.0;  // top vertices kept for phrase merging
};

/// Weighted PageRank-style iteration on an undirected graph:
///   S(v) = (1-d) + d * sum_u w_uv * S(u) / outsum(u)
/// until the largest per-vertex change drops below epsilon.
inline std::map<std::string, double> rank_graph(
    const std::map<std::string, std::map<std::string, double>>& adjacency,
    double damping = 0.85, double epsilon = 1e-6, int max_iterations = 100) {
  if (!(damping > 0.0 && damping < 1.0))
    throw Error("rank_graph: damping must be in (0,1)");
  std::map<std::string, double> score, outsum;
  for (const auto& [v, edges] : adjacency) {
    score[v] = 1.0;
    double s = 0.0;
    for (const auto& [_, w] : edges) s += w;
    outsum[v] = s;
  }
  for (int iter = 0; iter < max_iterations; ++iter) {
    std::map<std::string, double> next;
    double max_change = 0.0;
    for (const auto& [v, edges] : adjacency) {
      double acc = 0.0;
      for (const auto& [u, w] : edges)
        if (outsum.at(u) > 0) acc += w * score.at(u) / outsum.at(u);
      double s = (1.0 - damping) + damping * acc;
      max_change = std::max(max_change, std::abs(s - score.at(v)));
      next[v] = s;
    }
    score = std::move(next);
    if (max_change < epsilon) break;
  }
  return score;
}

inline std::vector<KeywordResult> extract_textrank(const TokenizedDoc& doc,
                                                   const TextRankOptions& opt = {}) {
  if (opt.window < 1) throw Error("extract_textrank: window must be >= 1");
  // vertices: content words; edges: co-occurrence within the window,
  // counting positions over the full token stream of a sentence
  std::map<std::string, std::map<std::string, double>> graph;
  for (const auto& sent : doc.sentences) {
    for (size_t i = 0; i < sent.size(); ++i) {
      if (sent[i].stop) continue;
      graph[sent[i].lower];  // isolated vertices still rank
      for (size_t j = i + 1; j < sent.size() && j <= i + (opt.window - 1); ++j) {
        if (sent[j].stop || sent[j].lower == sent[i].lower) continue;
        graph[sent[i].lower][sent[j].lower] += 1.0;
        graph[sent[j].lower][sent[i].lower] += 1.0;
      }
    }
  }
  if (graph.empty()) return {};
  std::map<std::string, double> score =
      rank_graph(graph, opt.damping, opt.epsilon, opt.max_iterations);

  // keep the top fraction of vertices
  std::vector<std::pair<double, std::string>> order;
  order.reserve(score.size());
  for (const auto& [w, s] : score) order.push_back({s, w});
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  size_t keep = std::max<size_t>(
      1, static_cast<size_t>(std::ceil(order.size() * opt.keep_fraction)));
  std::set<std::string> selected;
  for (size_t i = 0; i < keep && i < order.size(); ++i)
    selected.insert(order[i].second);

  // adjacent selected words merge into phrases
  std::map<std::string, detail::Ranked> phrases;
  for (const auto& sent : doc.sentences) {
    for (size_t i = 0; i < sent.size(); ++i) {
      if (sent[i].stop || !selected.count(sent[i].lower)) continue;
      std::vector<std::string> words{sent[i].lower};
      double s = score.at(sent[i].lower);
      size_t j = i + 1;
      while (j < sent.size() && !sent[j].stop && sent[j].joins_previous &&
             selected.count(sent[j].lower)) {
        words.push_back(sent[j].lower);
        s += score.at(sent[j].lower);
        ++j;
      }
      std::string key = join(words, " ");
      if (!phrases.count(key))
        phrases[key] = detail::Ranked{key, s, sent[i].offset};
      i = j - 1;
    }
  }
  std::vector<detail::Ranked> items;
  for (const auto& [_, r] : phrases) items.push_back(r);
  return detail::finalize(std::move(items), true, "textrank");
}

// ---------------------------------------------------------------------------
// TopicRank

struct TopicRankOptions {
  double similarity_threshold = 0.25;  // stem-overlap Jaccard for clustering
  double damping = 0.85;
  double epsilon = 1e-6;
  int max_iterations = 100;
};

inline std::vector<KeywordResult> extract_topicrank(const TokenizedDoc& doc,
                                                    const TopicRankOptions& opt = {}) {
  if (!(opt.similarity_threshold > 0.0 && opt.similarity_threshold < 1.0))
    throw Error("extract_topicrank: similarity_threshold must be in (0,1)");
  std::vector<detail::CandidateRun> runs = detail::candidate_runs(doc);
  if (runs.empty()) return {};

  // candidate types with their occurrence positions and stem sets
  struct Type {
    std::string phrase;
    std::set<std::string> stems;
    std::vector<int> positions;
    size_t first_offset = 0;
  };
  std::map<std::string, size_t> index;
  std::vector<Type> types;
  for (const auto& run : runs) {
    std::string key = join(run.words, " ");
    auto it = index.find(key);
    if (it == index.end()) {
      Type t;
      t.phrase = key;
      for (const auto& w : run.words) t.stems.insert(stem(w));
      t.first_offset = run.offset;
      index[key] = types.size();
      types.push_back(std::move(t));
    }
    types[index[key]].positions.push_back(run.first_pos);
  }

  // average-link agglomerative clustering on stem-set Jaccard
  auto jaccard = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    size_t inter = 0;
    for (const auto& x : a) inter += b.count(x);
    size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  };
  std::vector<std::vector<size_t>> clusters;
  for (size_t i = 0; i < types.size(); ++i) clusters.push_back({i});
  auto link = [&](const std::vector<size_t>& a, const std::vector<size_t>& b) {
    double s = 0.0;
    for (size_t i : a)
      for (size_t j : b) s += jaccard(types[i].stems, types[j].stems);
    return s / static_cast<double>(a.size() * b.size());
  };
  while (clusters.size() > 1) {
    double best = -1.0;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < clusters.size(); ++i)
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        double s = link(clusters[i], clusters[j]);
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    if (best < opt.similarity_threshold) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<long>(bj));
  }

  // complete topic graph weighted by reciprocal distances between
  // candidate occurrences
  std::map<std::string, std::map<std::string, double>> graph;
  auto topic_key = [](size_t i) { return "t" + std::to_string(i); };
  for (size_t i = 0; i < clusters.size(); ++i) graph[topic_key(i)];
  for (size_t i = 0; i < clusters.size(); ++i)
    for (size_t j = i + 1; j < clusters.size(); ++j) {
      double w = 0.0;
      for (size_t a : clusters[i])
        for (size_t b : clusters[j])
          for (int pa : types[a].positions)
            for (int pb : types[b].positions)
              if (pa != pb) w += 1.0 / std::abs(pa - pb);
      if (w > 0) {
        graph[topic_key(i)][topic_key(j)] = w;
        graph[topic_key(j)][topic_key(i)] = w;
      }
    }
  std::map<std::string, double> score =
      rank_graph(graph, opt.damping, opt.epsilon, opt.max_iterations);

  // one keyphrase per topic: its first-occurring candidate
  std::vector<detail::Ranked> items;
  for (size_t i = 0; i < clusters.size(); ++i) {
    size_t best_type = clusters[i][0];
    for (size_t t : clusters[i]) {
      int cur = *std::min_element(types[t].positions.begin(), types[t].positions.end());
      int best = *std::min_element(types[best_type].positions.begin(),
                                   types[best_type].positions.end());
      if (cur < best || (cur == best && types[t].phrase < types[best_type].phrase))
        best_type = t;
    }
    items.push_back(detail::Ranked{types[best_type].phrase, score.at(topic_key(i)),
                                   types[best_type].first_offset});
  }
  return detail::finalize(std::move(items), true, "topicrank");
}

// ---------------------------------------------------------------------------
// YAKE

struct YakeOptions {
  int max_ngram = 3;
  int window = 1;  // neighborhood span for the relatedness feature
};

/// Five per-term features (casing, position, frequency, relatedness,
/// sentence spread) combined as
///   S(w) = Rel*Pos / (Case + Freq/Rel + DifSentence/Rel)
/// and per phrase
///   S(kw) = prod S(w) / (freq(kw) * (1 + sum S(w))).
/// Lower scores are better.
inline std::vector<KeywordResult> extract_yake(const TokenizedDoc& doc,
                                               const YakeOptions& opt = {}) {
  if (opt.max_ngram < 1) throw Error("extract_yake: max_ngram must be >= 1");
  struct TermStats {
    double tf = 0, tf_upper = 0, tf_acronym = 0;
    std::vector<int> sentence_ids;
    std::set<std::string> left, right;  // distinct neighbors
    double left_cooc = 0, right_cooc = 0;
  };
  std::map<std::string, TermStats> stats;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    const auto& sent = doc.sentences[s];
    for (size_t i = 0; i < sent.size(); ++i) {
      const Token& t = sent[i];
      TermStats& st = stats[t.lower];
      st.tf += 1;
      bool acronym = t.surface.size() >= 2 &&
                     std::all_of(t.surface.begin(), t.surface.end(), [](unsigned char c) {
                       return std::isupper(c) || std::isdigit(c);
                     });
      if (acronym)
        st.tf_acronym += 1;
      else if (i > 0 && std::isupper(static_cast<unsigned char>(t.surface[0])))
        st.tf_upper += 1;  // sentence-initial capitals carry no signal
      if (st.sentence_ids.empty() || st.sentence_ids.back() != s)
        st.sentence_ids.push_back(s);
      for (int d = 1; d <= opt.window; ++d) {
        if (i >= static_cast<size_t>(d)) {
          st.left.insert(sent[i - d].lower);
          st.left_cooc += 1;
        }
        if (i + d < sent.size()) {
          st.right.insert(sent[i + d].lower);
          st.right_cooc += 1;
        }
      }
    }
  }
  if (stats.empty()) return {};

  double mean_tf = 0, max_tf = 0;
  for (const auto& [_, st] : stats) {
    mean_tf += st.tf;
    max_tf = std::max(max_tf, st.tf);
  }
  mean_tf /= static_cast<double>(stats.size());
  double var_tf = 0;
  for (const auto& [_, st] : stats) var_tf += (st.tf - mean_tf) * (st.tf - mean_tf);
  double std_tf = std::sqrt(var_tf / static_cast<double>(stats.size()));
  const double num_sentences = std::max(1, doc.num_sentences());

  std::map<std::string, double> term_score;
  for (const auto& [w, st] : stats) {
    double case_f = std::max(st.tf_upper, st.tf_acronym) / (1.0 + std::log(st.tf));
    const auto& sids = st.sentence_ids;
    double median_sentence =
        sids.size() % 2 ? sids[sids.size() / 2]
                        : 0.5 * (sids[sids.size() / 2 - 1] + sids[sids.size() / 2]);
    double pos = std::log(std::log(3.0 + median_sentence));
    double freq = st.tf / (mean_tf + std_tf);
    double dl = st.left_cooc > 0 ? st.left.size() / st.left_cooc : 0.0;
    double dr = st.right_cooc > 0 ? st.right.size() / st.right_cooc : 0.0;
    double rel = 1.0 + (dl + dr) * (st.tf / max_tf);
    double dif = static_cast<double>(sids.size()) / num_sentences;
    term_score[w] = (rel * pos) / (case_f + freq / rel + dif / rel);
  }

  // candidates: stopword-free n-grams, contiguous within a sentence
  struct Phrase {
    double count = 0;
    size_t offset = 0;
    std::vector<std::string> words;
  };
  std::map<std::string, Phrase> phrases;
  for (const auto& sent : doc.sentences) {
    for (size_t i = 0; i < sent.size(); ++i) {
      if (sent[i].stop) continue;
      std::vector<std::string> words;
      for (size_t j = i; j < sent.size() && words.size() <
           static_cast<size_t>(opt.max_ngram); ++j) {
        if (sent[j].stop) break;
        if (j > i && !sent[j].joins_previous) break;
        words.push_back(sent[j].lower);
        auto& p = phrases[join(words, " ")];
        p.count += 1;
        if (p.count == 1) {
          p.offset = sent[i].offset;
          p.words = words;
        }
      }
    }
  }

  std::vector<detail::Ranked> items;
  for (const auto& [key, p] : phrases) {
    double prod = 1.0, sum = 0.0;
    for (const auto& w : p.words) {
      prod *= term_score.at(w);
      sum += term_score.at(w);
    }
    double s = prod / (p.count * (1.0 + sum));
    items.push_back(detail::Ranked{key, s, p.offset});
  }
  return detail::finalize(std::move(items), /*higher_is_better=*/false, "yake");
}

// ---------------------------------------------------------------------------
// TF-IDF

/// Document frequencies over a background collection.
struct TfidfCorpus {
  long num_docs = 0;
  std::map<std::string, long> df;

  void add_document(const TokenizedDoc& doc) {
    std::set<std::string> seen;
    for (const auto& sent : doc.sentences)
      for (const auto& t : sent) seen.insert(t.lower);
    for (const auto& w : seen) ++df[w];
    ++num_docs;
  }

  static TfidfCorpus from_texts(const std::vector<std::string>& texts,
                                const std::set<std::string>& stopwords) {
    TfidfCorpus c;
    for (const auto& t : texts) c.add_document(tokenize(t, stopwords));
    return c;
  }
};

/// score(t) = tf(t, doc) * ln(N / df(t)); unseen terms use df = 1.
inline std::vector<KeywordResult> extract_tfidf(const TokenizedDoc& doc,
                                                const TfidfCorpus& corpus) {
  if (corpus.num_docs <= 0) throw Error("extract_tfidf: empty background corpus");
  std::map<std::string, std::pair<double, size_t>> tf;  // term -> (count, offset)
  for (const auto& sent : doc.sentences)
    for (const auto& t : sent) {
      if (t.stop) continue;
      auto it = tf.find(t.lower);
      if (it == tf.end())
        tf[t.lower] = {1.0, t.offset};
      else
        it->second.first += 1.0;
    }
  std::vector<detail::Ranked> items;
  for (const auto& [w, c] : tf) {
    auto it = corpus.df.find(w);
    long df = it == corpus.df.end() ? 1 : std::max<long>(1, it->second);
    double idf = std::log(static_cast<double>(corpus.num_docs) /
                          static_cast<double>(df));
    items.push_back(detail::Ranked{w, c.first * idf, c.second});
  }
  return detail::finalize(std::move(items), true, "tfidf");
}

}  // namespace voxkit

#endif  // VOXKIT_KEYWORDS_HPP_
