// voxkit/decoder.hpp  --  beam-pruned Viterbi token passing over a
// decoding graph, producing lattices and best-path transcripts
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

#ifndef VOXKIT_DECODER_HPP_
#define VOXKIT_DECODER_HPP_

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "voxkit/acoustic_model.hpp"
#include "voxkit/common.hpp"
#include "voxkit/decode_graph.hpp"
#include "voxkit/features.hpp"

namespace voxkit {

struct DecodeOptions {
  double beam = 16.0;           // natural-log pruning width
  double acoustic_scale = 0.1;  // multiplies emission log-likelihoods
  double lattice_beam = 8.0;    // arcs this far off the best path are dropped
  bool allow_partial = true;    // no-final decodes keep the best partial path
};

struct LatticeNode {
  int graph_node = 0;
  int frame = 0;
};

/// Scores stay split so LM rescoring can recombine them; both are
/// natural log. Arcs never cross more than one frame boundary.
struct LatticeArc {
  int source = 0;
  int target = 0;
  int output = kEpsilon;
  double acoustic = 0.0;
  double graph = 0.0;
};

struct Lattice {
  std::vector<LatticeNode> nodes;
  std::vector<LatticeArc> arcs;
  int start = 0;
  int final_node = -1;  // super-final collecting all complete paths
  int num_frames = 0;
  bool reached_final = true;
  std::vector<std::string> words;  // word id -> surface, copied from the graph

  bool empty() const { return nodes.empty() || arcs.empty(); }
};

struct Transcript {
  std::vector<std::string> words;
  double total_score = 0.0;
  std::vector<std::pair<int, int>> frames;  // per word: [start, end)
};

namespace detail {

/// Topological order of a lattice (it is a DAG: emitting arcs advance the
/// frame and epsilon arcs inherit the graph's acyclicity).
inline std::vector<int> lattice_topo_order(const Lattice& lat) {
  const int N = static_cast<int>(lat.nodes.size());
  std::vector<int> indeg(N, 0);
  std::vector<std::vector<int>> out(N);
  for (size_t i = 0; i < lat.arcs.size(); ++i) {
    ++indeg[lat.arcs[i].target];
    out[lat.arcs[i].source].push_back(static_cast<int>(i));
  }
  std::vector<int> order;
  order.reserve(N);
  std::vector<int> stack;
  for (int v = 0; v < N; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int ai : out[v])
      if (--indeg[lat.arcs[ai].target] == 0) stack.push_back(lat.arcs[ai].target);
  }
  if (static_cast<int>(order.size()) != N)
    throw Error("lattice is not acyclic");
  return order;
}

}  // namespace detail

/// Frame-synchronous Viterbi token passing. Emitting arcs consume one
/// frame and add acoustic_scale * gmm_log_likelihood; epsilon arcs are
/// closed within the frame. At most one token survives per graph node
/// per frame; tokens below best - beam are pruned. The lattice keeps
/// every surviving arc, then drops arcs more than lattice_beam below the
/// best complete path.
inline Lattice viterbi_decode(const FeatureMatrix& features,
                              const DecodingGraph& graph,
                              const AcousticModelSet& models,
                              const DecodeOptions& opt = {}) {
  if (!(opt.beam > 0)) throw Error("viterbi_decode: beam must be > 0");
  if (!(opt.acoustic_scale > 0))
    throw Error("viterbi_decode: acoustic_scale must be > 0");
  const int T = features.num_frames();
  if (T > 0 && features.dim() != models.dim())
    throw Error("viterbi_decode: feature dim " + std::to_string(features.dim()) +
                " does not match model dim " + std::to_string(models.dim()));
  if (graph.out.empty() && graph.num_nodes > 0)
    throw Error("viterbi_decode: graph out-index not built");

  const std::vector<const HmmState*> state_index = models.state_index();

  Lattice lat;
  lat.words = graph.words;
  lat.num_frames = T;

  // lattice node per (frame, graph node), created on first arrival
  std::map<std::pair<int, int>, int> node_ids;
  auto lat_node = [&](int frame, int g) {
    auto [it, inserted] = node_ids.emplace(std::make_pair(frame, g),
                                           static_cast<int>(lat.nodes.size()));
    if (inserted) lat.nodes.push_back(LatticeNode{g, frame});
    return it->second;
  };

  using TokenMap = std::map<int, double>;  // graph node -> best score

  // relaxes epsilon arcs to a fixpoint; records each crossed arc once
  auto epsilon_closure = [&](TokenMap& tokens, int frame) {
    std::set<std::pair<int, int>> recorded;  // (lat source, arc index)
    std::vector<int> work;
    work.reserve(tokens.size());
    for (const auto& [g, _] : tokens) work.push_back(g);
    while (!work.empty()) {
      int g = work.back();
      work.pop_back();
      double sc = tokens.at(g);
      int src = lat_node(frame, g);
      for (int ai : graph.out[g]) {
        const Arc& a = graph.arcs[ai];
        if (a.input != kEpsilon) continue;
        if (recorded.emplace(src, ai).second) {
          lat.arcs.push_back(LatticeArc{src, lat_node(frame, a.target), a.output,
                                        0.0, a.weight});
        }
        double cand = sc + a.weight;
        auto it = tokens.find(a.target);
        if (it == tokens.end() || cand > it->second) {
          tokens[a.target] = cand;
          work.push_back(a.target);
        }
      }
    }
  };

  auto prune = [&](TokenMap& tokens) {
    if (tokens.empty() || opt.beam == std::numeric_limits<double>::infinity())
      return;
    double best = kLogZero;
    for (const auto& [_, sc] : tokens) best = std::max(best, sc);
    for (auto it = tokens.begin(); it != tokens.end();)
      it = (it->second < best - opt.beam) ? tokens.erase(it) : std::next(it);
  };

  TokenMap cur;
  cur[graph.start] = 0.0;
  lat.start = lat_node(0, graph.start);
  epsilon_closure(cur, 0);
  prune(cur);

  std::vector<double> emission(state_index.size());
  for (int t = 0; t < T; ++t) {
    std::vector<bool> have(state_index.size(), false);
    auto emission_score = [&](int state) {
      if (!have[state]) {
        emission[state] = opt.acoustic_scale *
                          gmm_log_likelihood(state_index[state]->gmm,
                                             features.rows[t]);
        have[state] = true;
      }
      return emission[state];
    };
    TokenMap next;
    for (const auto& [g, sc] : cur) {
      int src = lat_node(t, g);
      for (int ai : graph.out[g]) {
        const Arc& a = graph.arcs[ai];
        if (a.input == kEpsilon) continue;
        double am = emission_score(a.input);
        double cand = sc + a.weight + am;
        lat.arcs.push_back(
            LatticeArc{src, lat_node(t + 1, a.target), a.output, am, a.weight});
        auto it = next.find(a.target);
        if (it == next.end() || cand > it->second) next[a.target] = cand;
      }
    }
    cur = std::move(next);
    if (cur.empty()) break;  // every token pruned or no emitting arc matched
    epsilon_closure(cur, t + 1);
    prune(cur);
  }

  // collect complete paths into a super-final node
  lat.final_node = static_cast<int>(lat.nodes.size());
  lat.nodes.push_back(LatticeNode{-1, T});
  bool any_final = false;
  for (const auto& [g, sc] : cur) {
    auto it = graph.finals.find(g);
    if (it == graph.finals.end()) continue;
    lat.arcs.push_back(
        LatticeArc{lat_node(T, g), lat.final_node, kEpsilon, 0.0, it->second});
    any_final = true;
  }
  lat.reached_final = any_final;
  if (!any_final) {
    if (!opt.allow_partial || cur.empty())
      throw Error("viterbi_decode: no token reached a final node");
    for (const auto& [g, _] : cur)
      lat.arcs.push_back(
          LatticeArc{lat_node(T, g), lat.final_node, kEpsilon, 0.0, 0.0});
  }

  // ---- trim to nodes on a start->final path, then lattice-beam prune
  auto trim = [&](double beam) {
    const int N = static_cast<int>(lat.nodes.size());
    std::vector<int> topo = detail::lattice_topo_order(lat);
    std::vector<double> fwd(N, kLogZero), bwd(N, kLogZero);
    std::vector<std::vector<int>> out(N), in(N);
    for (size_t i = 0; i < lat.arcs.size(); ++i) {
      out[lat.arcs[i].source].push_back(static_cast<int>(i));
      in[lat.arcs[i].target].push_back(static_cast<int>(i));
    }
    fwd[lat.start] = 0.0;
    for (int v : topo)
      if (fwd[v] != kLogZero)
        for (int ai : out[v]) {
          const LatticeArc& a = lat.arcs[ai];
          fwd[a.target] = std::max(fwd[a.target], fwd[v] + a.acoustic + a.graph);
        }
    bwd[lat.final_node] = 0.0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      if (bwd[*it] != kLogZero)
        for (int ai : in[*it]) {
          const LatticeArc& a = lat.arcs[ai];
          bwd[a.source] = std::max(bwd[a.source], a.acoustic + a.graph + bwd[*it]);
        }
    double best = fwd[lat.final_node];
    std::vector<int> remap(N, -1);
    std::vector<LatticeNode> kept_nodes;
    for (int v : topo) {
      if (fwd[v] == kLogZero || bwd[v] == kLogZero) continue;
      remap[v] = static_cast<int>(kept_nodes.size());
      kept_nodes.push_back(lat.nodes[v]);
    }
    std::vector<LatticeArc> kept_arcs;
    for (const auto& a : lat.arcs) {
      if (remap[a.source] < 0 || remap[a.target] < 0) continue;
      double through = fwd[a.source] + a.acoustic + a.graph + bwd[a.target];
      if (through < best - beam) continue;
      LatticeArc b = a;
      b.source = remap[a.source];
      b.target = remap[a.target];
      kept_arcs.push_back(b);
    }
    lat.nodes = std::move(kept_nodes);
    lat.arcs = std::move(kept_arcs);
    lat.start = remap[lat.start];
    lat.final_node = remap[lat.final_node];
    if (lat.start < 0 || lat.final_node < 0)
      throw Error("viterbi_decode: lattice lost its start or final node");
  };
  trim(opt.lattice_beam);
  // a second pass drops arcs left dangling by the beam cut
  trim(opt.lattice_beam);
  return lat;
}

// ---------------------------------------------------------------------------
// path extraction

namespace detail {

struct PathState {
  double priority = 0.0;  // exact total estimate (score so far + best-to-go)
  int node = 0;
  double score = 0.0;
  std::vector<std::string> words;
  std::vector<int> word_frames;  // start frame per word

  // min-heap by priority (higher score pops first), lexicographic words on ties
  bool operator<(const PathState& other) const {
    if (priority != other.priority) return priority < other.priority;
    return other.words < words;
  }
};

inline std::vector<Transcript> best_paths(const Lattice& lat, int n,
                                          int max_expansions = 200000) {
  if (lat.empty()) throw Error("empty lattice");
  const int N = static_cast<int>(lat.nodes.size());
  std::vector<std::vector<int>> out(N);
  for (size_t i = 0; i < lat.arcs.size(); ++i)
    out[lat.arcs[i].source].push_back(static_cast<int>(i));

  std::vector<int> topo = lattice_topo_order(lat);
  std::vector<double> bwd(N, kLogZero);
  bwd[lat.final_node] = 0.0;
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (int ai : out[*it]) {
      const LatticeArc& a = lat.arcs[ai];
      if (bwd[a.target] != kLogZero)
        bwd[*it] = std::max(bwd[*it], a.acoustic + a.graph + bwd[a.target]);
    }
  if (bwd[lat.start] == kLogZero) throw Error("lattice has no complete path");

  std::priority_queue<PathState> queue;
  queue.push(PathState{bwd[lat.start], lat.start, 0.0, {}, {}});
  std::vector<Transcript> results;
  std::set<std::vector<std::string>> seen;
  int expansions = 0;
  while (!queue.empty() && static_cast<int>(results.size()) < n &&
         expansions < max_expansions) {
    PathState st = queue.top();
    queue.pop();
    ++expansions;
    if (st.node == lat.final_node) {
      if (seen.insert(st.words).second) {
        Transcript tr;
        tr.words = st.words;
        tr.total_score = st.score;
        for (size_t i = 0; i < st.words.size(); ++i) {
          int start = st.word_frames[i];
          int end = i + 1 < st.words.size() ? st.word_frames[i + 1] : lat.num_frames;
          tr.frames.push_back({start, end});
        }
        results.push_back(std::move(tr));
      }
      continue;
    }
    for (int ai : out[st.node]) {
      const LatticeArc& a = lat.arcs[ai];
      if (bwd[a.target] == kLogZero) continue;
      PathState nx = st;
      nx.node = a.target;
      nx.score += a.acoustic + a.graph;
      nx.priority = nx.score + bwd[a.target];
      if (a.output != kEpsilon) {
        nx.words.push_back(lat.words[a.output]);
        nx.word_frames.push_back(lat.nodes[a.source].frame);
      }
      queue.push(std::move(nx));
    }
  }
  return results;
}

}  // namespace detail

/// Highest-scoring complete path; exact score ties resolve to the
/// lexicographically smallest word sequence.
inline Transcript lattice_best_path(const Lattice& lat) {
  std::vector<Transcript> r = detail::best_paths(lat, 1);
  if (r.empty()) throw Error("lattice has no complete path");
  return r[0];
}

/// Top-n distinct word sequences, scores non-increasing.
inline std::vector<Transcript> lattice_nbest(const Lattice& lat, int n) {
  if (n < 1) throw Error("lattice_nbest: n must be >= 1");
  return detail::best_paths(lat, n);
}

/// Text dump: node table `id graph_node frame`, then arcs with split
/// acoustic/graph scores.
inline void write_lattice(const Lattice& lat, std::ostream& os) {
  os << "frames " << lat.num_frames << "\n";
  os << "reached_final " << (lat.reached_final ? 1 : 0) << "\n";
  os << "nodes " << lat.nodes.size() << "\n";
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    os << i << ' ' << lat.nodes[i].graph_node << ' ' << lat.nodes[i].frame << "\n";
  os << "start " << lat.start << "\n";
  os << "final " << lat.final_node << "\n";
  os << "arcs " << lat.arcs.size() << "\n";
  for (const auto& a : lat.arcs) {
    os << a.source << ' ' << a.target << ' ';
    if (a.output == kEpsilon) os << 'e'; else os << lat.words[a.output];
    os << ' ' << format_g9(a.acoustic) << ' ' << format_g9(a.graph) << "\n";
  }
}

inline std::string write_lattice(const Lattice& lat) {
  std::ostringstream ss;
  write_lattice(lat, ss);
  return ss.str();
}

}  // namespace voxkit

#endif  // VOXKIT_DECODER_HPP_
