// tests/test_eval.cpp
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

#include "helpers.hpp"
#include "voxkit/eval.hpp"

using namespace voxkit;

namespace {

// the ground/hypothesis excerpt pair used as a regression fixture
const char* kRefExcerpt =
    "please respond to me as soon as possible with your comments and please "
    "pass it on to anyone who wants to see it";
const char* kHypExcerpt =
    "it is an ongoing as long as i was in the media and families but it only "
    "when it will need to see you";
// 18 edits over 23 reference words
constexpr double kExcerptWer = 100.0 * 18.0 / 23.0;

}  // namespace

TEST_CASE("normalization lowercases, strips punctuation, keeps apostrophes") {
  CHECK(normalize_text("Hello,   World!") == "hello world");
  CHECK(normalize_text("DON'T stop") == "don't stop");
  CHECK(normalize_text("...") == "");
  CHECK(normalize_words("A b,c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("alignment basics with the documented tie-break") {
  Alignment all_match = align_tokens({"a", "b"}, {"a", "b"});
  for (const auto& s : all_match) CHECK(s.op == EditOp::kMatch);

  Alignment one_sub = align_tokens({"a", "b", "c"}, {"a", "x", "c"});
  EditCounts c = count_ops(one_sub);
  CHECK(c.substitutions == 1);
  CHECK(c.matches == 2);
  CHECK(c.insertions == 0);
  CHECK(c.deletions == 0);

  Alignment one_ins = align_tokens({}, {"a"});
  REQUIRE(one_ins.size() == 1);
  CHECK(one_ins[0].op == EditOp::kInsert);
}

TEST_CASE("alignment replays both sequences exactly") {
  std::mt19937 rng(4);
  std::vector<std::string> vocab{"a", "b", "c", "d"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> ref, hyp;
    for (int i = 0; i < static_cast<int>(rng() % 8); ++i)
      ref.push_back(vocab[rng() % vocab.size()]);
    for (int i = 0; i < static_cast<int>(rng() % 8); ++i)
      hyp.push_back(vocab[rng() % vocab.size()]);
    Alignment a = align_tokens(ref, hyp);
    std::vector<std::string> r2, h2;
    for (const auto& s : a) {
      if (s.op != EditOp::kInsert) r2.push_back(s.ref);
      if (s.op != EditOp::kDelete) h2.push_back(s.hyp);
    }
    CHECK(r2 == ref);
    CHECK(h2 == hyp);
    // edit count equals the independent DP distance
    CHECK(count_ops(a).errors() == oracle::edit_distance(ref, hyp));
  }
}

TEST_CASE("wer on the single-substitution fixture") {
  CHECK(wer("a b c", "a b c") == 0.0);
  CHECK_THAT(wer("a b c", "a x c"),
             Catch::Matchers::WithinAbs(100.0 / 3.0, 1e-9));
  CHECK(format_fixed(wer("a b c", "a x c"), 2) == "33.33");
  CHECK_THROWS_AS(wer("", "a"), Error);
}

TEST_CASE("the excerpt pair reproduces the frozen regression constant") {
  std::vector<std::string> ref = normalize_words(kRefExcerpt);
  std::vector<std::string> hyp = normalize_words(kHypExcerpt);
  REQUIRE(ref.size() == 23);
  // independent DP oracle fixes the constant
  int d = oracle::edit_distance(ref, hyp);
  CHECK(d == 18);
  CHECK_THAT(wer(kRefExcerpt, kHypExcerpt),
             Catch::Matchers::WithinAbs(kExcerptWer, 1e-9));
  CHECK(format_fixed(wer(kRefExcerpt, kHypExcerpt), 2) == "78.26");
}

TEST_CASE("cer counts characters with spaces included") {
  CHECK(cer("abc", "abc") == 0.0);
  CHECK_THAT(cer("abc", "abd"), Catch::Matchers::WithinAbs(100.0 / 3.0, 1e-9));
  CHECK_THAT(cer("ab", ""), Catch::Matchers::WithinAbs(100.0, 1e-9));
  CHECK(cer("AB c", "ab c") == 0.0);
  CHECK_THROWS_AS(cer("...", "x"), Error);  // empty after normalization
}

TEST_CASE("order-independent wer uses multiset matching") {
  CHECK(wer_order_independent("a b c", "c a b") == 0.0);
  CHECK_THAT(wer_order_independent("a b c", "c b a x"),
             Catch::Matchers::WithinAbs(100.0 / 3.0, 1e-9));
  // repeated words match up to the minimum count
  CHECK_THAT(wer_order_independent("a a b", "a b b"),
             Catch::Matchers::WithinAbs(100.0 * 2.0 / 3.0, 1e-9));
  CHECK_THROWS_AS(wer_order_independent("", "a"), Error);
}

TEST_CASE("order-independent wer vanishes on random permutations") {
  std::mt19937 rng(10);
  std::vector<std::string> base{"one", "two", "three", "four", "five", "six"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> perm = base;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(wer_order_independent_tokens(base, perm) == 0.0);
  }
}

TEST_CASE("edit distance is symmetric and satisfies the triangle inequality") {
  std::mt19937 rng(20);
  std::vector<std::string> vocab{"p", "q", "r"};
  auto random_seq = [&] {
    std::vector<std::string> s;
    for (int i = 0; i < static_cast<int>(rng() % 7); ++i)
      s.push_back(vocab[rng() % vocab.size()]);
    return s;
  };
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> a = random_seq(), b = random_seq(), c = random_seq();
    int ab = count_ops(align_tokens(a, b)).errors();
    int ba = count_ops(align_tokens(b, a)).errors();
    CHECK(ab == ba);
    int ac = count_ops(align_tokens(a, c)).errors();
    int cb = count_ops(align_tokens(c, b)).errors();
    CHECK(ab <= ac + cb);
  }
}

TEST_CASE("evaluate_pairs aggregates counts corpus-style") {
  EvalReport rep = evaluate_pairs({{"a b c", "a x c"}, {"d e", "d e"}});
  CHECK(rep.ref_words == 5);
  CHECK(rep.word_counts.substitutions == 1);
  CHECK_THAT(rep.wer, Catch::Matchers::WithinAbs(20.0, 1e-9));
  // the substitution counts once as unmatched reference, once as excess
  // hypothesis: 2 errors over 5 reference words
  CHECK_THAT(rep.wer_order_independent, Catch::Matchers::WithinAbs(40.0, 1e-9));
  CHECK(rep.pairs.size() == 2);
  CHECK_THROWS_AS(evaluate_pairs({{"", "x"}}), Error);
}

TEST_CASE("html diff styles substitutions red and gaps cyan") {
  EvalReport rep = evaluate_pairs({{"good morning world", "good evening"}});
  std::string html = diff_report_html(rep);
  CHECK_THAT(html, Catch::Matchers::ContainsSubstring("General results"));
  CHECK_THAT(html, Catch::Matchers::ContainsSubstring("<td>CER</td>"));
  CHECK_THAT(html, Catch::Matchers::ContainsSubstring("<td>WER</td>"));
  CHECK_THAT(html,
             Catch::Matchers::ContainsSubstring("<td>WER (order independent)</td>"));
  CHECK_THAT(html, Catch::Matchers::ContainsSubstring("class=\"sub\""));
  CHECK_THAT(html, Catch::Matchers::ContainsSubstring("class=\"insdel\""));

  // identical pairs render without colored spans
  EvalReport same = evaluate_pairs({{"good morning", "good morning"}});
  std::string clean = diff_report_html(same);
  CHECK_THAT(clean, !Catch::Matchers::ContainsSubstring("class=\"sub\""));
  CHECK_THAT(clean, !Catch::Matchers::ContainsSubstring("class=\"insdel\""));
}

TEST_CASE("exactly one red span per substitution, in both columns") {
  EvalReport rep = evaluate_pairs({{"a b c", "a x c"}});
  std::string html = diff_report_html(rep);
  size_t count = 0, pos = 0;
  while ((pos = html.find("class=\"sub\"", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 2);  // once in the reference column, once in the hypothesis
}

TEST_CASE("text diff marks substitutions, deletions and insertions") {
  EvalReport rep = evaluate_pairs({{"a b c", "a x c d"}});
  std::string text = diff_report_text(rep);
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("{b->x}"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("[+d+]"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("WER (order independent)"));
}
