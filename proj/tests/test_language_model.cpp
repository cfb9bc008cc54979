// tests/test_language_model.cpp
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "voxkit/language_model.hpp"

using namespace voxkit;

namespace {

// The sample trained model, bigram count corrected to the four entries the
// section actually lists.
const char* kSampleArpa = R"(\data\
ngram 1=7
ngram 2=4

\1-grams:
-1.0000 <unk>	-0.2553
-98.9366 <s>	-0.3064
-1.0000 </s>	0.0000
-0.6990 hello	-0.2553
-0.6990 this	-0.2553
-0.6990 is	-0.2553
-0.6990 example	-0.1973

\2-grams:
-0.2553 <unk> wood
-0.2553 <s> <unk>
-0.2553 hello this
-0.2553 is example </s>

\end\
)";

std::vector<std::vector<std::string>> toy_corpus() {
  return {{"a", "b", "a", "b", "a"}};
}

/// Full-vocabulary conditional sum for a context, resolved through backoff.
double conditional_sum(const ArpaModel& m, const std::vector<std::string>& ctx) {
  double sum = 0.0;
  for (const auto& w : m.vocabulary) {
    if (w == kSentenceStart) continue;  // never predicted
    sum += std::pow(10.0, score_word(m, ctx, w));
  }
  return sum;
}

}  // namespace

TEST_CASE("parse_arpa loads the sample trained model") {
  ArpaModel m = parse_arpa(kSampleArpa);
  CHECK(m.order == 2);
  const NgramEntry* hello = m.find_order(1, {"hello"});
  REQUIRE(hello != nullptr);
  CHECK_THAT(hello->log_prob, Catch::Matchers::WithinAbs(-0.6990, 1e-9));
  REQUIRE(hello->has_backoff);
  CHECK_THAT(hello->backoff, Catch::Matchers::WithinAbs(-0.2553, 1e-9));
  CHECK(m.tables[0].size() == 7);
  CHECK(m.tables[1].size() == 4);
  CHECK(m.vocabulary.count("<unk>") == 1);
  CHECK(m.vocabulary.count("wood") == 0);  // only a bigram continuation

  // the odd "is example </s>" line parses as a trailing-</s> entry
  const NgramEntry* odd = m.find_order(2, {"is", "example", "</s>"});
  REQUIRE(odd != nullptr);
  CHECK_FALSE(odd->has_backoff);
}

TEST_CASE("parse_arpa accepts an empty declared model") {
  ArpaModel m = parse_arpa("\\data\\\nngram 1=0\n\n\\1-grams:\n\n\\end\\\n");
  CHECK(m.order == 1);
  CHECK(m.tables[0].empty());
}

TEST_CASE("parse_arpa error paths name the offending line") {
  // non-numeric probability
  try {
    parse_arpa(
        "\\data\\\nngram 1=1\n\n\\1-grams:\nxyz hello\n\n\\end\\\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  // count mismatch
  CHECK_THROWS_WITH(
      parse_arpa("\\data\\\nngram 1=3\n\n\\1-grams:\n-0.5 a\n\n\\end\\\n"),
      Catch::Matchers::ContainsSubstring("declares"));
  // missing data header and missing end marker
  CHECK_THROWS_AS(parse_arpa("hello"), ParseError);
  CHECK_THROWS_AS(
      parse_arpa("\\data\\\nngram 1=1\n\n\\1-grams:\n-0.5 a\n"), ParseError);
}

TEST_CASE("write -> parse round-trip reproduces the model exactly") {
  ArpaModel a = parse_arpa(kSampleArpa);
  std::string text = write_arpa(a);
  ArpaModel b = parse_arpa(text);
  REQUIRE(a.order == b.order);
  for (int n = 1; n <= a.order; ++n) {
    REQUIRE(a.tables[n - 1].size() == b.tables[n - 1].size());
    for (const auto& [toks, ea] : a.tables[n - 1]) {
      const NgramEntry* eb = b.find_order(n, toks);
      REQUIRE(eb != nullptr);
      CHECK(ea.log_prob == eb->log_prob);
      CHECK(ea.has_backoff == eb->has_backoff);
      if (ea.has_backoff) CHECK(ea.backoff == eb->backoff);
    }
  }
  // writing the reparsed model is byte-identical
  CHECK(write_arpa(b) == text);
}

TEST_CASE("score_sequence applies the backoff rule by hand-checked values") {
  ArpaModel m = parse_arpa(kSampleArpa);
  // "<s> hello": bigram absent, so backoff(<s>) + unigram(hello)
  CHECK_THAT(score_sequence(m, {"<s>", "hello"}),
             Catch::Matchers::WithinAbs(-0.3064 - 0.6990, 1e-9));
  // explicit bigram wins over backoff
  CHECK_THAT(score_sequence(m, {"hello", "this"}),
             Catch::Matchers::WithinAbs(-0.6990 + -0.2553, 1e-9));
  CHECK(score_sequence(m, {}) == 0.0);
  // OOV maps to <unk>
  CHECK_THAT(score_sequence(m, {"wood"}),
             Catch::Matchers::WithinAbs(-1.0000, 1e-9));
}

TEST_CASE("any sequence scores at most zero") {
  ArpaModel m = parse_arpa(kSampleArpa);
  std::mt19937 rng(3);
  std::vector<std::string> vocab{"hello", "this", "is", "example", "wood", "qqq"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> words;
    int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) words.push_back(vocab[rng() % vocab.size()]);
    CHECK(score_sequence(m, words) <= 0.0);
  }
}

TEST_CASE("train_ngram reproduces hand-counted discounted ratios") {
  ArpaModel m = train_ngram(toy_corpus(), 2, 0.5);
  // N(a b)=2, N(a)=3: undiscounted 2/3, with discount (2-0.5)/3 = 0.5
  const NgramEntry* ab = m.find_order(2, {"a", "b"});
  REQUIRE(ab != nullptr);
  CHECK_THAT(std::pow(10.0, ab->log_prob), Catch::Matchers::WithinAbs(0.5, 1e-9));

  // unigram events: a:3 b:2 </s>:1, N=6
  const NgramEntry* a = m.find_order(1, {"a"});
  REQUIRE(a != nullptr);
  CHECK_THAT(std::pow(10.0, a->log_prob),
             Catch::Matchers::WithinAbs((3.0 - 0.5) / 6.0, 1e-9));
  // freed unigram mass goes to <unk>: 0.5 * 3 distinct / 6
  const NgramEntry* unk = m.find_order(1, {kUnknownWord});
  REQUIRE(unk != nullptr);
  CHECK_THAT(std::pow(10.0, unk->log_prob),
             Catch::Matchers::WithinAbs(0.25, 1e-9));
}

TEST_CASE("single-word corpus splits mass between the word and </s>") {
  ArpaModel m = train_ngram({{"x"}}, 1, 0.5);
  const NgramEntry* x = m.find_order(1, {"x"});
  const NgramEntry* eos = m.find_order(1, {kSentenceEnd});
  REQUIRE(x != nullptr);
  REQUIRE(eos != nullptr);
  // counts {x:1, </s>:1}: each 0.5 before discounting, 0.25 after
  CHECK_THAT(std::pow(10.0, x->log_prob), Catch::Matchers::WithinAbs(0.25, 1e-9));
  CHECK_THAT(std::pow(10.0, eos->log_prob), Catch::Matchers::WithinAbs(0.25, 1e-9));
}

TEST_CASE("trained conditionals sum to one over the full vocabulary") {
  std::mt19937 rng(17);
  std::vector<std::string> vocab{"a", "b", "c", "d", "e"};
  std::vector<std::vector<std::string>> corpus;
  for (int s = 0; s < 50; ++s) {
    std::vector<std::string> sent;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) sent.push_back(vocab[rng() % vocab.size()]);
    corpus.push_back(std::move(sent));
  }
  for (int order : {1, 2, 3}) {
    ArpaModel m = train_ngram(corpus, order, 0.5);
    // every observed context, including the empty one
    CHECK_THAT(conditional_sum(m, {}), Catch::Matchers::WithinAbs(1.0, 1e-6));
    for (int n = 1; n < order; ++n)
      for (const auto& [ctx, _] : m.tables[n - 1]) {
        if (ctx.back() == kSentenceEnd) continue;  // no continuations
        CHECK_THAT(conditional_sum(m, ctx), Catch::Matchers::WithinAbs(1.0, 1e-6));
      }
  }
}

TEST_CASE("train_ngram is deterministic down to the bytes") {
  std::vector<std::vector<std::string>> corpus = {
      {"the", "cat", "sat"}, {"the", "dog", "sat"}, {"a", "cat", "ran"}};
  std::string a = write_arpa(train_ngram(corpus, 3, 0.5));
  std::string b = write_arpa(train_ngram(corpus, 3, 0.5));
  CHECK(a == b);
  ArpaModel reparsed = parse_arpa(a);
  CHECK(write_arpa(reparsed) == a);
}

TEST_CASE("train_ngram validates its inputs") {
  CHECK_THROWS_AS(train_ngram({}, 2, 0.5), Error);
  CHECK_THROWS_AS(train_ngram(toy_corpus(), 0, 0.5), Error);
  CHECK_THROWS_AS(train_ngram(toy_corpus(), 2, 0.0), Error);
  CHECK_THROWS_AS(train_ngram({{"a", "<s>"}}, 2, 0.5), Error);
}

TEST_CASE("prefixes of backoff-weighted n-grams exist in lower tables") {
  ArpaModel m = train_ngram(
      {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}, 3, 0.5);
  for (int n = 2; n <= m.order; ++n)
    for (const auto& [toks, _] : m.tables[n - 1]) {
      std::vector<std::string> prefix(toks.begin(), toks.end() - 1);
      const NgramEntry* p = m.find_order(n - 1, prefix);
      REQUIRE(p != nullptr);
    }
}

TEST_CASE("order-1 scores are additive over concatenation") {
  ArpaModel m = train_ngram(toy_corpus(), 1, 0.5);
  std::vector<std::string> left{"a", "b"}, right{"b", "a", "a"};
  std::vector<std::string> both = left;
  both.insert(both.end(), right.begin(), right.end());
  CHECK_THAT(score_sequence(m, both),
             Catch::Matchers::WithinAbs(
                 score_sequence(m, left) + score_sequence(m, right), 1e-9));
}

TEST_CASE("perplexity of a uniform unigram model equals the vocabulary size") {
  // build a uniform 4-word model directly
  ArpaModel m;
  m.order = 1;
  m.tables.resize(1);
  for (const char* w : {"a", "b", "c", "</s>"}) {
    NgramEntry e;
    e.log_prob = std::log10(0.25);
    m.tables[0][{w}] = e;
    m.vocabulary.insert(w);
  }
  double pp = perplexity(m, {{"a", "b"}, {"c", "a", "b"}});
  CHECK_THAT(pp, Catch::Matchers::WithinAbs(4.0, 1e-9));
}

TEST_CASE("perplexity matches a direct per-token product") {
  std::vector<std::vector<std::string>> corpus = {{"a", "b"}, {"b", "a", "b"}};
  ArpaModel m = train_ngram(corpus, 2, 0.5);
  double total_lp = 0.0;
  long tokens = 0;
  for (const auto& sent : corpus) {
    std::vector<std::string> ctx{kSentenceStart};
    for (size_t i = 0; i <= sent.size(); ++i) {
      std::string w = i < sent.size() ? sent[i] : kSentenceEnd;
      total_lp += score_word(m, ctx, w);
      ctx.push_back(w);
      ++tokens;
    }
  }
  double expected = std::pow(10.0, -total_lp / static_cast<double>(tokens));
  CHECK_THAT(perplexity(m, corpus), Catch::Matchers::WithinRel(expected, 1e-9));

  // training-set perplexity of an ML unigram model cannot beat |V|
  ArpaModel uni = train_ngram(corpus, 1, 0.01);
  CHECK(perplexity(uni, corpus) <= uni.vocabulary.size());
}
