// tests/test_sentiment.cpp
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

#include <random>
#include <sstream>

#include "voxkit/sentiment.hpp"

using namespace voxkit;

namespace {

SentimentLexicon tiny_lexicon() {
  std::istringstream is(
      "good\t0.7\t0.6\n"
      "bad\t-0.6\t0.65\n"
      "very\t0\t0.2\t1.3\n"
      "slightly\t0\t0.1\t0.7\n");
  return SentimentLexicon::parse(is);
}

}  // namespace

TEST_CASE("empty text scores zero with zero matches") {
  SentimentScore s = analyze_sentiment("", tiny_lexicon());
  CHECK(s.polarity == 0.0);
  CHECK(s.subjectivity == 0.0);
  CHECK(s.matched_terms == 0);
  CHECK(classify(s) == "neutral");
}

TEST_CASE("a single matched word carries its lexicon entry") {
  SentimentScore s = analyze_sentiment("good", tiny_lexicon());
  CHECK_THAT(s.polarity, Catch::Matchers::WithinAbs(0.7, 1e-12));
  CHECK_THAT(s.subjectivity, Catch::Matchers::WithinAbs(0.6, 1e-12));
  CHECK(s.matched_terms == 1);
}

TEST_CASE("negation multiplies polarity by -0.5 and leaves subjectivity") {
  SentimentScore s = analyze_sentiment("not good", tiny_lexicon());
  CHECK_THAT(s.polarity, Catch::Matchers::WithinAbs(-0.35, 1e-12));
  CHECK_THAT(s.subjectivity, Catch::Matchers::WithinAbs(0.6, 1e-12));

  // negator further than three tokens back has no effect
  SentimentScore far =
      analyze_sentiment("not one two three good", tiny_lexicon());
  CHECK_THAT(far.polarity, Catch::Matchers::WithinAbs(0.7, 1e-12));
}

TEST_CASE("intensifiers scale the following term") {
  SentimentScore s = analyze_sentiment("very good", tiny_lexicon());
  CHECK_THAT(s.polarity, Catch::Matchers::WithinAbs(0.91, 1e-12));
  CHECK(s.matched_terms == 1);  // the modifier itself is not a term
  SentimentScore weak = analyze_sentiment("slightly bad", tiny_lexicon());
  CHECK_THAT(weak.polarity, Catch::Matchers::WithinAbs(-0.42, 1e-12));
}

TEST_CASE("analysis is invariant to case and extra whitespace") {
  SentimentScore a = analyze_sentiment("Very  GOOD,   not   BAD", tiny_lexicon());
  SentimentScore b = analyze_sentiment("very good, not bad", tiny_lexicon());
  CHECK(a.polarity == b.polarity);
  CHECK(a.subjectivity == b.subjectivity);
  CHECK(a.matched_terms == b.matched_terms);
}

TEST_CASE("concatenating a document with itself changes nothing") {
  std::string text = "good day, bad news, very good food";
  SentimentScore once = analyze_sentiment(text, tiny_lexicon());
  SentimentScore twice =
      analyze_sentiment(text + ". " + text, tiny_lexicon());
  CHECK_THAT(twice.polarity, Catch::Matchers::WithinAbs(once.polarity, 1e-12));
  CHECK_THAT(twice.subjectivity,
             Catch::Matchers::WithinAbs(once.subjectivity, 1e-12));
  CHECK(twice.matched_terms == 2 * once.matched_terms);
}

TEST_CASE("negators flip the sign of any single positive term") {
  const SentimentLexicon& lex = SentimentLexicon::builtin();
  int flipped = 0;
  for (const auto& [word, e] : lex.entries) {
    if (e.is_modifier() || e.polarity <= 0) continue;
    SentimentScore plain = analyze_sentiment(word, lex);
    if (plain.matched_terms != 1) continue;  // word may be a negator itself
    SentimentScore negated = analyze_sentiment("not " + word, lex);
    CHECK(plain.polarity > 0);
    CHECK(negated.polarity < 0);
    if (++flipped >= 200) break;
  }
  CHECK(flipped >= 100);
}

TEST_CASE("bounds hold for random lexicons and random texts") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::string> vocab;
  for (int i = 0; i < 30; ++i) vocab.push_back("w" + std::to_string(i));
  for (int trial = 0; trial < 300; ++trial) {
    SentimentLexicon lex;
    for (const auto& w : vocab) {
      if (u(rng) < 0.3) continue;
      SentimentEntry e;
      e.polarity = 2.0 * u(rng) - 1.0;
      e.subjectivity = u(rng);
      if (u(rng) < 0.2) e.intensity = 0.5 + 2.0 * u(rng);
      lex.entries[w] = e;
    }
    std::string text;
    int len = static_cast<int>(u(rng) * 20);
    for (int i = 0; i < len; ++i) {
      if (u(rng) < 0.15) text += "not ";
      text += vocab[rng() % vocab.size()] + " ";
    }
    SentimentScore s = analyze_sentiment(text, lex);
    CHECK(s.polarity >= -1.0);
    CHECK(s.polarity <= 1.0);
    CHECK(s.subjectivity >= 0.0);
    CHECK(s.subjectivity <= 1.0);
    if (s.matched_terms == 0) {
      CHECK(s.polarity == 0.0);
      CHECK(s.subjectivity == 0.0);
    }
  }
}

TEST_CASE("classification thresholds and boundary") {
  SentimentScore pos{0.1367, 0.5, 3};
  SentimentScore neg{-0.0495, 0.5, 3};
  SentimentScore zero{0.0, 0.0, 0};
  CHECK(classify(pos) == "positive");
  CHECK(classify(neg) == "negative");
  CHECK(classify(zero) == "neutral");
  CHECK(classify(pos, 0.2) == "neutral");
  CHECK_THROWS_AS(classify(pos, -0.1), Error);
}

TEST_CASE("percent rendering matches the reporting format byte for byte") {
  SentimentScore pos{0.1367, 0.5142, 3};
  SentimentScore neg{-0.0495, 0.5093, 3};
  CHECK(format_polarity(pos) == "13.67% (positive)");
  CHECK(format_polarity(neg) == "4.95% (negative)");
  CHECK(format_subjectivity(pos) == "51.42%");
  CHECK(format_subjectivity(neg) == "50.93%");
  SentimentScore zero{0.0, 0.0, 0};
  CHECK(format_polarity(zero) == "0.00% (neutral)");
}

TEST_CASE("the bundled lexicon is large, bounded and usable") {
  const SentimentLexicon& lex = SentimentLexicon::builtin();
  CHECK(lex.entries.size() > 2500);
  for (const auto& [word, e] : lex.entries) {
    CHECK(!word.empty());
    CHECK(word == to_lower(word));
    CHECK(e.polarity >= -1.0);
    CHECK(e.polarity <= 1.0);
    CHECK(e.subjectivity >= 0.0);
    CHECK(e.subjectivity <= 1.0);
    CHECK(e.intensity > 0.0);
  }
  SentimentScore s = analyze_sentiment(
      "an excellent, delightful film with a terrible ending", lex);
  CHECK(s.matched_terms == 3);
}

TEST_CASE("lexicon files are validated on load") {
  std::istringstream bad_pol("word\t1.5\t0.5\n");
  CHECK_THROWS_AS(SentimentLexicon::parse(bad_pol), ParseError);
  std::istringstream bad_fields("word\t0.5\n");
  CHECK_THROWS_AS(SentimentLexicon::parse(bad_fields), ParseError);
  std::istringstream bad_int("word\t0.5\t0.5\t0\n");
  CHECK_THROWS_AS(SentimentLexicon::parse(bad_int), ParseError);
  std::istringstream ok("# comment\nword\t0.5\t0.5\n");
  CHECK(SentimentLexicon::parse(ok).entries.size() == 1);
}
