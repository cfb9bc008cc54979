// voxkit/lexicon.hpp  --  phonetic dictionary parsing and lookup
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

#ifndef VOXKIT_LEXICON_HPP_
#define VOXKIT_LEXICON_HPP_

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"

namespace voxkit {

/// The 39 ARPAbet phones without stress markers.
inline const std::vector<std::string>& arpabet_phones() {
  static const std::vector<std::string> phones = {
      "AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH",
      "EH", "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH", "K",
      "L",  "M",  "N",  "NG", "OW", "OY", "P",  "R",  "S",  "SH",
      "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"};
  return phones;
}

inline std::set<std::string> arpabet_phone_set() {
  return {arpabet_phones().begin(), arpabet_phones().end()};
}

struct PronunciationEntry {
  std::string word;   // lowercase
  int variant = 1;    // dense per word, starting at 1
  std::vector<std::string> phones;

  bool operator==(const PronunciationEntry&) const = default;
};

struct Lexicon {
  std::map<std::string, std::vector<PronunciationEntry>> entries;  // key lowercase
  std::set<std::string> phone_set;
  std::vector<std::string> warnings;  // e.g. stripped stress digits

  bool contains(const std::string& word) const {
    return entries.count(to_lower(word)) > 0;
  }
  const std::vector<PronunciationEntry>& lookup(const std::string& word) const {
    auto it = entries.find(to_lower(word));
    if (it == entries.end())
      throw Error("out-of-vocabulary word: \"" + word + "\"");
    return it->second;
  }
  std::vector<std::string> words() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& [w, _] : entries) out.push_back(w);
    return out;
  }
};

namespace detail {

// "word(2)" -> {"word", 2}; plain "word" -> {"word", 0}
inline std::pair<std::string, int> split_variant_suffix(const std::string& token,
                                                        int lineno) {
  size_t open = token.find('(');
  if (open == std::string::npos) return {token, 0};
  if (token.back() != ')' || open == 0)
    throw ParseError("malformed variant suffix in '" + token + "'", lineno);
  std::string digits = token.substr(open + 1, token.size() - open - 2);
  if (digits.empty()) throw ParseError("malformed variant suffix in '" + token + "'", lineno);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed variant suffix in '" + token + "'", lineno);
  int v = std::stoi(digits);
  if (v < 2) throw ParseError("variant suffix must be >= 2 in '" + token + "'", lineno);
  return {token.substr(0, open), v};
}

// strips a trailing stress digit: "AH0" -> "AH"
inline std::string strip_stress(const std::string& phone, bool* stripped) {
  if (phone.size() > 1 && std::isdigit(static_cast<unsigned char>(phone.back()))) {
    *stripped = true;
    return phone.substr(0, phone.size() - 1);
  }
  return phone;
}

}  // namespace detail

/// One entry per line: word, whitespace, space-separated phones.
/// `word(2)` marks pronunciation variants; `;;;` starts a comment line.
/// Stress digits are stripped with a warning; unknown phones are errors.
inline Lexicon parse_dict(std::istream& is, const std::set<std::string>& phone_set) {
  Lexicon lex;
  lex.phone_set = phone_set;
  std::string line;
  int lineno = 0;
  bool any_stress = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.rfind(";;;", 0) == 0) continue;
    std::vector<std::string> fields = split_fields(t);
    if (fields.size() < 2)
      throw ParseError("entry needs a word and at least one phone", lineno);

    auto [raw_word, variant] = detail::split_variant_suffix(fields[0], lineno);
    std::string word = to_lower(raw_word);
    if (word.empty()) throw ParseError("empty word", lineno);

    std::vector<std::string> phones;
    for (size_t i = 1; i < fields.size(); ++i) {
      bool stripped = false;
      std::string p = detail::strip_stress(fields[i], &stripped);
      any_stress |= stripped;
      if (!phone_set.count(p))
        throw ParseError("phone '" + p + "' not in phone inventory (word '" +
                             word + "')",
                         lineno);
      phones.push_back(p);
    }

    auto& variants = lex.entries[word];
    int expected = static_cast<int>(variants.size()) + 1;
    if (variant == 0) {
      if (!variants.empty())
        throw ParseError("duplicate entry for '" + word +
                             "'; use the (" + std::to_string(expected) +
                             ") variant suffix",
                         lineno);
      variant = 1;
    } else if (variant != expected) {
      throw ParseError("variant (" + std::to_string(variant) + ") for '" + word +
                           "' out of order; expected (" +
                           std::to_string(expected) + ")",
                       lineno);
    }
    for (const auto& e : variants)
      if (e.phones == phones)
        throw ParseError("duplicate pronunciation for '" + word + "'", lineno);
    variants.push_back(PronunciationEntry{word, variant, std::move(phones)});
  }
  if (any_stress)
    lex.warnings.push_back("stress digits were stripped from phone symbols");
  return lex;
}

inline Lexicon parse_dict(const std::string& text, const std::set<std::string>& phone_set) {
  std::istringstream is(text);
  return parse_dict(is, phone_set);
}

inline Lexicon load_dict(const std::string& path, const std::set<std::string>& phone_set) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dictionary: " + path);
  return parse_dict(in, phone_set);
}

inline std::string write_dict(const Lexicon& lex) {
  std::ostringstream os;
  for (const auto& [word, variants] : lex.entries)
    for (const auto& e : variants) {
      os << word;
      if (e.variant > 1) os << '(' << e.variant << ')';
      os << ' ' << join(e.phones, " ") << '\n';
    }
  return os.str();
}

enum class VariantPolicy { kFirst, kAll };

/// With kFirst, the concatenation of variant-1 pronunciations (a single
/// sequence). With kAll, the cross-product of variants per word.
inline std::vector<std::vector<std::string>> words_to_phones(
    const Lexicon& lex, const std::vector<std::string>& words,
    VariantPolicy policy = VariantPolicy::kFirst) {
  std::vector<std::vector<std::string>> result{{}};
  for (const std::string& w : words) {
    const auto& variants = lex.lookup(w);  // throws on OOV, naming the word
    if (policy == VariantPolicy::kFirst) {
      auto& seq = result[0];
      seq.insert(seq.end(), variants[0].phones.begin(), variants[0].phones.end());
    } else {
      std::vector<std::vector<std::string>> next;
      next.reserve(result.size() * variants.size());
      for (const auto& prefix : result)
        for (const auto& v : variants) {
          std::vector<std::string> seq = prefix;
          seq.insert(seq.end(), v.phones.begin(), v.phones.end());
          next.push_back(std::move(seq));
        }
      result = std::move(next);
      if (result.size() > 100000)
        throw Error("variant cross-product too large");
    }
  }
  if (words.empty()) return {{}};
  return result;
}

}  // namespace voxkit

#endif  // VOXKIT_LEXICON_HPP_
