// voxkit/decode_graph.hpp  --  lexicon + n-gram LM + HMM topology compiled
// into one weighted labeled digraph
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

#ifndef VOXKIT_DECODE_GRAPH_HPP_
#define VOXKIT_DECODE_GRAPH_HPP_

#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/acoustic_model.hpp"
#include "voxkit/common.hpp"
#include "voxkit/language_model.hpp"
#include "voxkit/lexicon.hpp"

namespace voxkit {

constexpr int kEpsilon = -1;

/// input: global emitting-state id (consumes a frame) or kEpsilon.
/// output: word id or kEpsilon. weight: natural log. lm marks weights
/// that came from the language model (word, backoff and final arcs).
struct Arc {
  int source = 0;
  int target = 0;
  int input = kEpsilon;
  int output = kEpsilon;
  double weight = 0.0;
  bool lm = false;
};

struct GraphStats {
  int nodes = 0;
  int arcs = 0;
  int emitting_arcs = 0;
  int word_arcs = 0;
  int emitting_states = 0;  // distinct emitting-state ids referenced
};

struct GraphOptions {
  bool skip_missing_words = false;   // words in the LM but not the lexicon
  bool optional_silence = true;      // silence loop at every word boundary
  double silence_penalty = -2.302585092994046;  // ln(0.1)
  std::string silence_phone = kSilencePhone;
  VariantPolicy variants = VariantPolicy::kAll;
};

struct DecodingGraph {
  int num_nodes = 0;
  int start = 0;
  std::vector<Arc> arcs;
  std::map<int, double> finals;  // node -> natural-log final weight

  std::vector<std::string> words;          // word id -> surface form
  std::vector<std::string> state_symbols;  // emitting-state id -> "phone:k"
  std::map<std::vector<std::string>, int> context_nodes;  // LM history -> node
  std::vector<std::string> warnings;

  std::vector<std::vector<int>> out;  // node -> indices into arcs

  int word_id(const std::string& w) const {
    for (size_t i = 0; i < words.size(); ++i)
      if (words[i] == w) return static_cast<int>(i);
    return kEpsilon;
  }

  void build_out_index() {
    out.assign(num_nodes, {});
    for (size_t i = 0; i < arcs.size(); ++i)
      out[arcs[i].source].push_back(static_cast<int>(i));
  }

  /// Rejects epsilon-input cycles; the decoder's within-frame closure
  /// relies on their absence.
  void check_epsilon_acyclic() const {
    std::vector<std::vector<int>> eps_out(num_nodes);
    for (const auto& a : arcs)
      if (a.input == kEpsilon) eps_out[a.source].push_back(a.target);
    std::vector<int> color(num_nodes, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < num_nodes; ++s) {
      if (color[s]) continue;
      stack.push_back({s, 0});
      color[s] = 1;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < eps_out[v].size()) {
          int u = eps_out[v][i++];
          if (color[u] == 1) throw Error("decoding graph has an epsilon cycle");
          if (color[u] == 0) {
            color[u] = 1;
            stack.push_back({u, 0});
          }
        } else {
          color[v] = 2;
          stack.pop_back();
        }
      }
    }
  }
};

inline GraphStats graph_stats(const DecodingGraph& g) {
  GraphStats s;
  s.nodes = g.num_nodes;
  s.arcs = static_cast<int>(g.arcs.size());
  std::set<int> inputs;
  for (const auto& a : g.arcs) {
    if (a.input != kEpsilon) {
      ++s.emitting_arcs;
      inputs.insert(a.input);
    }
    if (a.output != kEpsilon) ++s.word_arcs;
  }
  s.emitting_states = static_cast<int>(inputs.size());
  return s;
}

namespace detail {

struct GraphBuilder {
  const Lexicon& lex;
  const ArpaModel& lm;
  const AcousticModelSet& models;
  const GraphOptions& opt;
  DecodingGraph g;

  int add_node() { return g.num_nodes++; }

  void add_arc(int src, int dst, int input, int output, double w, bool lm_arc) {
    g.arcs.push_back(Arc{src, dst, input, output, w, lm_arc});
  }

  /// Emitting chain for one phone: entry arc consumes the first frame in
  /// state 0, self-loops stay, forward arcs move on. Returns the last
  /// node; *pending_exit carries ln(forward) of the phone's last state,
  /// to be paid on the next entry or exit arc.
  int expand_phone(int from, const std::string& phone, double* pending_exit) {
    const PhoneHmm& hmm = models.phones.at(phone);
    int cur = from;
    double enter_weight = *pending_exit;
    for (int k = 0; k < kStatesPerPhone; ++k) {
      int state = models.state_id(phone, k);
      int node = add_node();
      add_arc(cur, node, state, kEpsilon, enter_weight, false);
      add_arc(node, node, state, kEpsilon, std::log(hmm.states[k].self_loop), false);
      enter_weight = std::log(hmm.states[k].forward);
      cur = node;
    }
    *pending_exit = enter_weight;
    return cur;
  }

  void expand_pronunciation(int from, int to, const std::vector<std::string>& phones) {
    int cur = from;
    double pending = 0.0;
    for (const auto& p : phones) cur = expand_phone(cur, p, &pending);
    add_arc(cur, to, kEpsilon, kEpsilon, pending, false);
  }

  /// Word arc: boundary arc carrying the word label and LM weight, then
  /// one emitting chain per pronunciation variant.
  void expand_word(int from, int to, int word_id, const std::string& word,
                   double lm_weight) {
    int entry = add_node();
    add_arc(from, entry, kEpsilon, word_id, lm_weight, true);
    const auto& variants = lex.lookup(word);
    if (opt.variants == VariantPolicy::kFirst) {
      expand_pronunciation(entry, to, variants[0].phones);
    } else {
      for (const auto& v : variants) expand_pronunciation(entry, to, v.phones);
    }
  }

  void add_silence_loop(int node) {
    auto it = models.phones.find(opt.silence_phone);
    if (it == models.phones.end()) return;
    int entry = add_node();
    add_arc(node, entry, kEpsilon, kEpsilon, opt.silence_penalty, false);
    expand_pronunciation(entry, node, {opt.silence_phone});
  }

  static bool valid_context(const std::vector<std::string>& h) {
    for (size_t i = 0; i < h.size(); ++i) {
      if (h[i] == kSentenceEnd) return false;
      if (h[i] == kSentenceStart && i != 0) return false;
    }
    return true;
  }

  /// Longest suffix of `h` materialized as a context node.
  int next_context(std::vector<std::string> h) const {
    size_t max_len = static_cast<size_t>(std::max(0, lm.order - 1));
    while (h.size() > max_len) h.erase(h.begin());
    while (!h.empty() && !g.context_nodes.count(h)) h.erase(h.begin());
    return g.context_nodes.at(h);
  }

  DecodingGraph build() {
    if (lm.order < 1 || lm.tables[0].empty())
      throw Error("build_graph: empty language model");

    // words shared by LM and lexicon
    std::map<std::string, int> word_ids;
    for (const auto& w : lm.vocabulary) {
      if (w == kSentenceStart || w == kSentenceEnd || w == kUnknownWord) continue;
      if (!lex.contains(w)) {
        if (!opt.skip_missing_words)
          throw Error("LM word '" + w + "' missing from the lexicon (use "
                      "skip_missing_words to drop such words)");
        g.warnings.push_back("skipping LM word not in lexicon: " + w);
        continue;
      }
      word_ids.emplace(w, 0);
    }
    if (word_ids.empty())
      throw Error("build_graph: lexicon and language model share no words");
    for (auto& [w, id] : word_ids) {
      id = static_cast<int>(g.words.size());
      g.words.push_back(w);
    }

    for (const auto& [name, hmm] : models.phones)
      for (int k = 0; k < kStatesPerPhone; ++k)
        g.state_symbols.push_back(name + ":" + std::to_string(k));

    // context nodes: every 1..order-1 gram usable as a history
    g.context_nodes[{}] = add_node();
    for (int n = 1; n < lm.order; ++n)
      for (const auto& [toks, e] : lm.tables[n - 1]) {
        if (static_cast<int>(toks.size()) != n || !valid_context(toks)) continue;
        g.context_nodes[toks] = add_node();
      }

    int final_node = add_node();
    g.finals[final_node] = 0.0;

    // backoff arcs: history h falls back to h minus its first word
    for (const auto& [h, node] : g.context_nodes) {
      if (h.empty()) continue;
      const NgramEntry* e = lm.find_order(static_cast<int>(h.size()), h);
      double bow = (e && e->has_backoff) ? e->backoff * std::numbers::ln10 : 0.0;
      std::vector<std::string> shorter(h.begin() + 1, h.end());
      while (!g.context_nodes.count(shorter)) shorter.erase(shorter.begin());
      add_arc(node, g.context_nodes.at(shorter), kEpsilon, kEpsilon, bow, true);
    }

    // word and final arcs from every explicit n-gram
    bool any_final = false;
    for (int n = 1; n <= lm.order; ++n) {
      for (const auto& [toks, e] : lm.tables[n - 1]) {
        if (static_cast<int>(toks.size()) != n) continue;  // odd sample entries
        const std::string& w = toks.back();
        std::vector<std::string> h(toks.begin(), toks.end() - 1);
        if (!valid_context(h) || !g.context_nodes.count(h)) continue;
        double weight = e.log_prob * std::numbers::ln10;
        if (w == kSentenceEnd) {
          add_arc(g.context_nodes.at(h), final_node, kEpsilon, kEpsilon, weight, true);
          any_final = true;
          continue;
        }
        auto it = word_ids.find(w);
        if (it == word_ids.end()) continue;  // <s>, <unk> or skipped word
        std::vector<std::string> next = h;
        next.push_back(w);
        expand_word(g.context_nodes.at(h), next_context(next), it->second, w, weight);
      }
    }
    if (!any_final)
      throw Error("build_graph: language model defines no </s> event");

    if (opt.optional_silence)
      for (const auto& [h, node] : g.context_nodes) add_silence_loop(node);

    g.start = lm.order > 1 && g.context_nodes.count({kSentenceStart})
                  ? g.context_nodes.at({kSentenceStart})
                  : g.context_nodes.at({});

    trim();
    g.build_out_index();
    g.check_epsilon_acyclic();
    return std::move(g);
  }

  /// Drops nodes not reachable from start or not reaching a final node,
  /// then renumbers. The graph is fully trimmed on return.
  void trim() {
    std::vector<std::vector<int>> fwd(g.num_nodes), bwd(g.num_nodes);
    for (const auto& a : g.arcs) {
      fwd[a.source].push_back(a.target);
      bwd[a.target].push_back(a.source);
    }
    auto reach = [&](const std::vector<int>& seeds,
                     const std::vector<std::vector<int>>& adj) {
      std::vector<bool> seen(g.num_nodes, false);
      std::vector<int> stack = seeds;
      for (int s : stack) seen[s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (!seen[u]) {
            seen[u] = true;
            stack.push_back(u);
          }
      }
      return seen;
    };
    std::vector<bool> from_start = reach({g.start}, fwd);
    std::vector<int> final_seeds;
    for (const auto& [n, _] : g.finals) final_seeds.push_back(n);
    std::vector<bool> to_final = reach(final_seeds, bwd);

    std::vector<int> remap(g.num_nodes, -1);
    int next_id = 0;
    for (int v = 0; v < g.num_nodes; ++v)
      if (from_start[v] && to_final[v]) remap[v] = next_id++;
    if (remap[g.start] < 0)
      throw Error("build_graph: no path from start to a final node");

    std::vector<Arc> kept;
    kept.reserve(g.arcs.size());
    for (const auto& a : g.arcs)
      if (remap[a.source] >= 0 && remap[a.target] >= 0) {
        Arc b = a;
        b.source = remap[a.source];
        b.target = remap[a.target];
        kept.push_back(b);
      }
    g.arcs = std::move(kept);
    std::map<int, double> finals;
    for (const auto& [n, w] : g.finals)
      if (remap[n] >= 0) finals[remap[n]] = w;
    g.finals = std::move(finals);
    std::map<std::vector<std::string>, int> contexts;
    for (const auto& [h, n] : g.context_nodes)
      if (remap[n] >= 0) contexts[h] = remap[n];
    g.context_nodes = std::move(contexts);
    g.start = remap[g.start];
    g.num_nodes = next_id;
  }
};

}  // namespace detail

/// Expands every LM word into its pronunciations and every phone into its
/// 3-state HMM; LM log10 probabilities are converted to natural log on the
/// word-boundary and backoff arcs. The result is connected and trimmed.
inline DecodingGraph build_graph(const Lexicon& lex, const ArpaModel& lm,
                                 const AcousticModelSet& models,
                                 const GraphOptions& opt = {}) {
  detail::GraphBuilder builder{lex, lm, models, opt, {}};
  return builder.build();
}

/// Text dump: symbol tables then one arc per line
/// `src dst input output weight`, with `e` for epsilon labels.
inline void write_graph(const DecodingGraph& g, std::ostream& os) {
  os << "nodes " << g.num_nodes << "\n";
  os << "start " << g.start << "\n";
  for (const auto& [n, w] : g.finals) os << "final " << n << ' ' << format_g9(w) << "\n";
  os << "words " << g.words.size() << "\n";
  for (size_t i = 0; i < g.words.size(); ++i) os << i << ' ' << g.words[i] << "\n";
  os << "states " << g.state_symbols.size() << "\n";
  for (size_t i = 0; i < g.state_symbols.size(); ++i)
    os << i << ' ' << g.state_symbols[i] << "\n";
  os << "arcs " << g.arcs.size() << "\n";
  for (const auto& a : g.arcs) {
    os << a.source << ' ' << a.target << ' ';
    if (a.input == kEpsilon) os << 'e'; else os << a.input;
    os << ' ';
    if (a.output == kEpsilon) os << 'e'; else os << g.words[a.output];
    os << ' ' << format_g9(a.weight) << (a.lm ? " lm" : "") << "\n";
  }
}

inline std::string write_graph(const DecodingGraph& g) {
  std::ostringstream ss;
  write_graph(g, ss);
  return ss.str();
}

}  // namespace voxkit

#endif  // VOXKIT_DECODE_GRAPH_HPP_
