// tests/test_lexicon.cpp
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

#include "voxkit/lexicon.hpp"

using namespace voxkit;

namespace {

std::set<std::string> toy_phones() {
  // Code-2 style entries use H; ARPAbet proper has HH. Keep both plus the
  // rest of the symbols the fixtures need.
  std::set<std::string> s = arpabet_phone_set();
  s.insert("H");
  return s;
}

}  // namespace

TEST_CASE("parse_dict reads the classic two-line dictionary") {
  Lexicon lex = parse_dict("hello H EH L OW\nworld W ER L D\n", toy_phones());
  REQUIRE(lex.entries.size() == 2);
  const auto& hello = lex.lookup("hello");
  REQUIRE(hello.size() == 1);
  CHECK(hello[0].variant == 1);
  CHECK(hello[0].phones == std::vector<std::string>{"H", "EH", "L", "OW"});
  const auto& world = lex.lookup("world");
  CHECK(world[0].phones == std::vector<std::string>{"W", "ER", "L", "D"});
}

TEST_CASE("variant suffix notation appends dense variants") {
  Lexicon lex = parse_dict("hello H EH L OW\nhello(2) HH AH L OW\n", toy_phones());
  const auto& hello = lex.lookup("hello");
  REQUIRE(hello.size() == 2);
  CHECK(hello[1].variant == 2);
  CHECK(hello[1].phones == std::vector<std::string>{"HH", "AH", "L", "OW"});

  // out-of-order or duplicate variants are rejected
  CHECK_THROWS_AS(parse_dict("a AH\na(3) EY\n", toy_phones()), ParseError);
  CHECK_THROWS_AS(parse_dict("a AH\na AH\n", toy_phones()), ParseError);
  CHECK_THROWS_AS(parse_dict("a(x) AH\n", toy_phones()), ParseError);
}

TEST_CASE("unknown phones and empty pronunciations are rejected") {
  CHECK_THROWS_WITH(parse_dict("hello H EH L QQ\n", toy_phones()),
                    Catch::Matchers::ContainsSubstring("QQ"));
  CHECK_THROWS_AS(parse_dict("hello\n", toy_phones()), ParseError);
}

TEST_CASE("stress digits are stripped with a warning") {
  Lexicon lex = parse_dict("read R IY1 D\n", arpabet_phone_set());
  CHECK(lex.lookup("read")[0].phones == std::vector<std::string>{"R", "IY", "D"});
  REQUIRE(!lex.warnings.empty());
}

TEST_CASE("comments and case-insensitive lookup") {
  Lexicon lex = parse_dict(";;; a comment\nHello HH AH L OW\n", arpabet_phone_set());
  CHECK(lex.contains("HELLO"));
  CHECK(lex.lookup("Hello") == lex.lookup("hello"));
  CHECK_THROWS_WITH(lex.lookup("zzz"), Catch::Matchers::ContainsSubstring("zzz"));
}

TEST_CASE("parse -> write -> parse is the identity") {
  std::string text =
      "hello H EH L OW\nhello(2) HH AH L OW\nworld W ER L D\nzebra Z IY B R AH\n";
  Lexicon a = parse_dict(text, toy_phones());
  Lexicon b = parse_dict(write_dict(a), toy_phones());
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [word, variants] : a.entries) {
    REQUIRE(b.entries.count(word));
    CHECK(b.entries.at(word) == variants);
  }
  CHECK(write_dict(a) == write_dict(b));
}

TEST_CASE("every phone in every entry is inside the declared set") {
  Lexicon lex = parse_dict("cat K AE T\ndog D AO G\n", arpabet_phone_set());
  for (const auto& [_, variants] : lex.entries)
    for (const auto& v : variants)
      for (const auto& p : v.phones) CHECK(lex.phone_set.count(p) == 1);
}

TEST_CASE("words_to_phones concatenates first variants") {
  Lexicon lex = parse_dict("hello H EH L OW\nworld W ER L D\n", toy_phones());
  auto seqs = words_to_phones(lex, {"hello", "world"}, VariantPolicy::kFirst);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0] ==
        std::vector<std::string>{"H", "EH", "L", "OW", "W", "ER", "L", "D"});

  auto empty = words_to_phones(lex, {}, VariantPolicy::kFirst);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  CHECK_THROWS_WITH(words_to_phones(lex, {"zzz"}, VariantPolicy::kFirst),
                    Catch::Matchers::ContainsSubstring("zzz"));
}

TEST_CASE("words_to_phones kAll expands the variant cross-product") {
  Lexicon lex = parse_dict(
      "a AH\na(2) EY\nthe DH AH\nthe(2) DH IY\n", arpabet_phone_set());
  auto seqs = words_to_phones(lex, {"a", "the"}, VariantPolicy::kAll);
  REQUIRE(seqs.size() == 4);
  std::set<std::vector<std::string>> got(seqs.begin(), seqs.end());
  CHECK(got.count({"AH", "DH", "AH"}));
  CHECK(got.count({"AH", "DH", "IY"}));
  CHECK(got.count({"EY", "DH", "AH"}));
  CHECK(got.count({"EY", "DH", "IY"}));
}

TEST_CASE("the default ARPAbet inventory has 39 phones") {
  CHECK(arpabet_phones().size() == 39);
  CHECK(arpabet_phone_set().count("HH") == 1);
  CHECK(arpabet_phone_set().count("ZH") == 1);
}
