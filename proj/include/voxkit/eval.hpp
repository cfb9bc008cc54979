// voxkit/eval.hpp  --  CER / WER / order-independent WER and diff reports
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

#ifndef VOXKIT_EVAL_HPP_
#define VOXKIT_EVAL_HPP_

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"

namespace voxkit {

enum class EditOp { kMatch, kSubstitute, kInsert, kDelete };

struct AlignStep {
  EditOp op = EditOp::kMatch;
  std::string ref;  // empty for insertions
  std::string hyp;  // empty for deletions
};

using Alignment = std::vector<AlignStep>;

struct EditCounts {
  long matches = 0, substitutions = 0, insertions = 0, deletions = 0;
  long errors() const { return substitutions + insertions + deletions; }
};

inline EditCounts count_ops(const Alignment& a) {
  EditCounts c;
  for (const auto& s : a) switch (s.op) {
      case EditOp::kMatch: ++c.matches; break;
      case EditOp::kSubstitute: ++c.substitutions; break;
      case EditOp::kInsert: ++c.insertions; break;
      case EditOp::kDelete: ++c.deletions; break;
    }
  return c;
}

/// Lowercase, strip punctuation except apostrophes, collapse whitespace.
inline std::string normalize_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c == '\'') {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(c));
    } else {
      pending_space = true;
    }
  }
  return out;
}

inline std::vector<std::string> normalize_words(const std::string& s) {
  return split_fields(normalize_text(s));
}

/// Minimum-edit-distance alignment with unit costs. Ties prefer
/// match > substitute > delete > insert, deterministically.
inline Alignment align_tokens(const std::vector<std::string>& ref,
                              const std::vector<std::string>& hyp) {
  const size_t m = ref.size(), n = hyp.size();
  std::vector<std::vector<int>> d(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 0; i <= m; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= n; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = 1; j <= n; ++j) {
      int sub = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      int del = d[i - 1][j] + 1;
      int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({sub, del, ins});
    }

  Alignment out;
  size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        d[i][j] == d[i - 1][j - 1]) {
      out.push_back({EditOp::kMatch, ref[i - 1], hyp[j - 1]});
      --i; --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      out.push_back({EditOp::kSubstitute, ref[i - 1], hyp[j - 1]});
      --i; --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      out.push_back({EditOp::kDelete, ref[i - 1], ""});
      --i;
    } else {
      out.push_back({EditOp::kInsert, "", hyp[j - 1]});
      --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline double wer_tokens(const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp) {
  if (ref.empty()) throw Error("wer: empty reference");
  EditCounts c = count_ops(align_tokens(ref, hyp));
  return 100.0 * static_cast<double>(c.errors()) / static_cast<double>(ref.size());
}

/// 100 * (S+I+D) / |ref| over case-folded, punctuation-stripped words.
inline double wer(const std::string& ref, const std::string& hyp) {
  return wer_tokens(normalize_words(ref), normalize_words(hyp));
}

/// Character-level analog of wer; spaces count, case is folded.
inline double cer(const std::string& ref, const std::string& hyp) {
  std::string r = normalize_text(ref), h = normalize_text(hyp);
  if (r.empty()) throw Error("cer: empty reference after normalization");
  auto chars = [](const std::string& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(std::string(1, c));
    return out;
  };
  return wer_tokens(chars(r), chars(h));
}

/// Both sides as multisets: with m matched words,
/// rate = 100 * (|ref| - m + max(0, |hyp| - m)) / |ref|.
inline double wer_order_independent_tokens(const std::vector<std::string>& ref,
                                           const std::vector<std::string>& hyp) {
  if (ref.empty()) throw Error("wer_order_independent: empty reference");
  std::map<std::string, long> rc, hc;
  for (const auto& w : ref) ++rc[w];
  for (const auto& w : hyp) ++hc[w];
  long matched = 0;
  for (const auto& [w, c] : rc) {
    auto it = hc.find(w);
    if (it != hc.end()) matched += std::min(c, it->second);
  }
  long unmatched_ref = static_cast<long>(ref.size()) - matched;
  long excess_hyp = std::max<long>(0, static_cast<long>(hyp.size()) - matched);
  return 100.0 * static_cast<double>(unmatched_ref + excess_hyp) /
         static_cast<double>(ref.size());
}

inline double wer_order_independent(const std::string& ref, const std::string& hyp) {
  return wer_order_independent_tokens(normalize_words(ref), normalize_words(hyp));
}

// ---------------------------------------------------------------------------
// corpus-level report

struct PairEval {
  std::string ref, hyp;  // normalized
  Alignment words;
  Alignment chars;
};

struct EvalReport {
  double cer = 0.0;
  double wer = 0.0;
  double wer_order_independent = 0.0;
  long ref_words = 0, ref_chars = 0;
  EditCounts word_counts, char_counts;
  std::vector<PairEval> pairs;
};

/// Rates are aggregated corpus-style: summed edit counts over summed
/// reference lengths.
inline EvalReport evaluate_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  EvalReport rep;
  long oi_errors = 0;
  for (const auto& [raw_ref, raw_hyp] : pairs) {
    PairEval pe;
    pe.ref = normalize_text(raw_ref);
    pe.hyp = normalize_text(raw_hyp);
    if (pe.ref.empty()) throw Error("evaluate_pairs: empty reference line");
    std::vector<std::string> rw = split_fields(pe.ref), hw = split_fields(pe.hyp);
    pe.words = align_tokens(rw, hw);
    auto chars = [](const std::string& s) {
      std::vector<std::string> out;
      for (char c : s) out.push_back(std::string(1, c));
      return out;
    };
    pe.chars = align_tokens(chars(pe.ref), chars(pe.hyp));

    EditCounts wc = count_ops(pe.words), cc = count_ops(pe.chars);
    rep.word_counts.matches += wc.matches;
    rep.word_counts.substitutions += wc.substitutions;
    rep.word_counts.insertions += wc.insertions;
    rep.word_counts.deletions += wc.deletions;
    rep.char_counts.matches += cc.matches;
    rep.char_counts.substitutions += cc.substitutions;
    rep.char_counts.insertions += cc.insertions;
    rep.char_counts.deletions += cc.deletions;
    rep.ref_words += static_cast<long>(rw.size());
    rep.ref_chars += static_cast<long>(pe.ref.size());

    std::map<std::string, long> rc, hc;
    for (const auto& w : rw) ++rc[w];
    for (const auto& w : hw) ++hc[w];
    long matched = 0;
    for (const auto& [w, c] : rc) {
      auto it = hc.find(w);
      if (it != hc.end()) matched += std::min(c, it->second);
    }
    oi_errors += (static_cast<long>(rw.size()) - matched) +
                 std::max<long>(0, static_cast<long>(hw.size()) - matched);
    rep.pairs.push_back(std::move(pe));
  }
  if (rep.ref_words == 0) throw Error("evaluate_pairs: no reference words");
  rep.wer = 100.0 * rep.word_counts.errors() / static_cast<double>(rep.ref_words);
  rep.cer = 100.0 * rep.char_counts.errors() / static_cast<double>(rep.ref_chars);
  rep.wer_order_independent =
      100.0 * oi_errors / static_cast<double>(rep.ref_words);
  return rep;
}

// ---------------------------------------------------------------------------
// diff rendering: substitutions red, insertions/deletions cyan

namespace detail {

inline std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string diff_report_html(const EvalReport& rep) {
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">\n"
     << "<style>\n";
  os << "body{font-family:sans-serif}\n"
     << "table{border-collapse:collapse;margin:1em 0}\n"
     << "td,th{border:1px solid #999;padding:4px 8px;vertical-align:top}\n"
     << ".sub{background:#f99}\n"
     << ".insdel{background:#9ee}\n"
     << "</style></head><body>\n";
  os << "<h2>General results</h2>\n<table>\n";
  os << "<tr><td>CER</td><td>" << format_fixed(rep.cer, 2) << "</td></tr>\n";
  os << "<tr><td>WER</td><td>" << format_fixed(rep.wer, 2) << "</td></tr>\n";
  os << "<tr><td>WER (order independent)</td><td>"
     << format_fixed(rep.wer_order_independent, 2) << "</td></tr>\n";
  os << "</table>\n";
  os << "<h2>Difference spotting</h2>\n";
  for (const auto& pe : rep.pairs) {
    os << "<table><tr><th>reference</th><th>hypothesis</th></tr>\n<tr><td>";
    for (const auto& st : pe.words) {
      if (st.op == EditOp::kInsert) continue;
      const char* cls = st.op == EditOp::kMatch
                            ? nullptr
                            : (st.op == EditOp::kSubstitute ? "sub" : "insdel");
      if (cls)
        os << "<span class=\"" << cls << "\">" << detail::html_escape(st.ref)
           << "</span> ";
      else
        os << detail::html_escape(st.ref) << ' ';
    }
    os << "</td><td>";
    for (const auto& st : pe.words) {
      if (st.op == EditOp::kDelete) continue;
      const char* cls = st.op == EditOp::kMatch
                            ? nullptr
                            : (st.op == EditOp::kSubstitute ? "sub" : "insdel");
      if (cls)
        os << "<span class=\"" << cls << "\">" << detail::html_escape(st.hyp)
           << "</span> ";
      else
        os << detail::html_escape(st.hyp) << ' ';
    }
    os << "</td></tr></table>\n";
  }
  os << "</body></html>\n";
  return os.str();
}

/// Plain-text rendering: {ref->hyp} substitutions, [-ref-] deletions,
/// [+hyp+] insertions.
inline std::string diff_report_text(const EvalReport& rep) {
  std::ostringstream os;
  os << "General results\n";
  os << "CER\t" << format_fixed(rep.cer, 2) << "\n";
  os << "WER\t" << format_fixed(rep.wer, 2) << "\n";
  os << "WER (order independent)\t" << format_fixed(rep.wer_order_independent, 2)
     << "\n\n";
  for (size_t i = 0; i < rep.pairs.size(); ++i) {
    os << "pair " << (i + 1) << ":";
    for (const auto& st : rep.pairs[i].words) {
      switch (st.op) {
        case EditOp::kMatch: os << ' ' << st.ref; break;
        case EditOp::kSubstitute: os << " {" << st.ref << "->" << st.hyp << "}"; break;
        case EditOp::kDelete: os << " [-" << st.ref << "-]"; break;
        case EditOp::kInsert: os << " [+" << st.hyp << "+]"; break;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace voxkit

#endif  // VOXKIT_EVAL_HPP_
