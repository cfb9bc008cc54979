// voxkit/text.hpp  --  tokenization, stopwords, light stemming
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

#ifndef VOXKIT_TEXT_HPP_
#define VOXKIT_TEXT_HPP_

#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "voxkit/common.hpp"

namespace voxkit {

struct Token {
  std::string surface;
  std::string lower;
  size_t offset = 0;          // character offset into the original text
  bool stop = false;
  bool joins_previous = false;  // only whitespace between this and the
                                // previous token of the same sentence
};

/// Sentence-segmented token stream. Sentences break at '.', '!', '?'
/// and newlines.
struct TokenizedDoc {
  std::vector<std::vector<Token>> sentences;

  int num_sentences() const { return static_cast<int>(sentences.size()); }
  int num_tokens() const {
    int n = 0;
    for (const auto& s : sentences) n += static_cast<int>(s.size());
    return n;
  }
  bool empty() const { return sentences.empty(); }
};

/// 174-entry English stopword list.
inline const std::set<std::string>& english_stopwords() {
  static const std::set<std::string> words = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "your", "yours", "yourself", "yourselves", "he", "him", "his",
      "himself", "she", "her", "hers", "herself", "it", "its", "itself",
      "they", "them", "their", "theirs", "themselves", "what", "which",
      "who", "whom", "this", "that", "these", "those", "am", "is", "are",
      "was", "were", "be", "been", "being", "have", "has", "had", "having",
      "do", "does", "did", "doing", "would", "should", "could", "ought",
      "i'm", "you're", "he's", "she's", "it's", "we're", "they're", "i've",
      "you've", "we've", "they've", "i'd", "you'd", "he'd", "she'd", "we'd",
      "they'd", "i'll", "you'll", "he'll", "she'll", "we'll", "they'll",
      "isn't", "aren't", "wasn't", "weren't", "hasn't", "haven't", "hadn't",
      "doesn't", "don't", "didn't", "won't", "wouldn't", "shan't",
      "shouldn't", "can't", "cannot", "couldn't", "mustn't", "let's",
      "that's", "who's", "what's", "here's", "there's", "when's", "where's",
      "why's", "how's", "a", "an", "the", "and", "but", "if", "or",
      "because", "as", "until", "while", "of", "at", "by", "for", "with",
      "about", "against", "between", "into", "through", "during", "before",
      "after", "above", "below", "to", "from", "up", "down", "in", "out",
      "on", "off", "over", "under", "again", "further", "then", "once",
      "here", "there", "when", "where", "why", "how", "all", "any", "both",
      "each", "few", "more", "most", "other", "some", "such", "no", "nor",
      "not", "only", "own", "same", "so", "than", "too", "very"};
  return words;
}

inline std::set<std::string> load_stopwords(const std::string& path) {
  std::set<std::string> out;
  for (const auto& line : read_lines(path)) {
    std::string w = to_lower(trim(line));
    if (!w.empty() && w[0] != '#') out.insert(w);
  }
  return out;
}

/// Tokens are runs of alphanumerics plus internal apostrophes; everything
/// else delimits. Offsets are strictly increasing.
inline TokenizedDoc tokenize(const std::string& text,
                             const std::set<std::string>& stopwords) {
  TokenizedDoc doc;
  std::vector<Token> sentence;
  size_t i = 0;
  bool gap_has_punct = true;  // sentence start never joins
  auto flush_sentence = [&] {
    if (!sentence.empty()) {
      doc.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
    gap_has_punct = true;
  };
  auto is_token_char = [](unsigned char c) {
    return std::isalnum(c) || c == '\'';
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!is_token_char(c)) {
      if (c == '.' || c == '!' || c == '?' || c == '\n')
        flush_sentence();
      else if (!std::isspace(c))
        gap_has_punct = true;
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && is_token_char(static_cast<unsigned char>(text[i]))) ++i;
    std::string raw = text.substr(start, i - start);
    // trim apostrophes at the edges, keep interior ones ("don't")
    size_t b = raw.find_first_not_of('\'');
    if (b == std::string::npos) continue;
    size_t e = raw.find_last_not_of('\'');
    Token tok;
    tok.surface = raw.substr(b, e - b + 1);
    tok.lower = to_lower(tok.surface);
    tok.offset = start + b;
    tok.stop = stopwords.count(tok.lower) > 0;
    tok.joins_previous = !sentence.empty() && !gap_has_punct;
    sentence.push_back(std::move(tok));
    gap_has_punct = false;
  }
  flush_sentence();
  return doc;
}

/// Light Porter-style suffix stripper, enough to cluster inflected
/// variants ("countries"/"country", "ranked"/"ranking").
inline std::string stem(const std::string& word) {
  std::string w = to_lower(word);
  auto ends = [&](const char* suf) {
    size_t n = std::strlen(suf);
    return w.size() >= n && w.compare(w.size() - n, n, suf) == 0;
  };
  auto chop = [&](size_t n) { w.resize(w.size() - n); };

  if (ends("sses")) chop(2);
  else if (ends("ies") && w.size() > 4) { chop(3); w += 'y'; }
  else if (ends("ss")) {}
  else if (ends("s") && w.size() > 3) chop(1);

  if (ends("eed")) chop(1);
  else if (ends("ing") && w.size() > 5) {
    chop(3);
    if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2] &&
        w.back() != 'l' && w.back() != 's')
      chop(1);  // running -> run
  } else if (ends("ed") && w.size() > 4) {
    chop(2);
    if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2] &&
        w.back() != 'l' && w.back() != 's')
      chop(1);  // stopped -> stop
  }

  if (ends("ly") && w.size() > 4) chop(2);
  return w;
}

}  // namespace voxkit

#endif  // VOXKIT_TEXT_HPP_
