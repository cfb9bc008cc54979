// tests/helpers.hpp  --  independent oracles used to check the library:
// naive DFT, plain edit-distance DP, exhaustive graph-path enumeration,
// dense power iteration. These deliberately avoid the implementation
// paths they verify.
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

#ifndef VOXKIT_TESTS_HELPERS_HPP_
#define VOXKIT_TESTS_HELPERS_HPP_

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "voxkit/acoustic_model.hpp"
#include "voxkit/decode_graph.hpp"
#include "voxkit/features.hpp"

namespace oracle {

/// O(n^2) DFT magnitude-squared spectrum, bins 0..n/2 of an n-point
/// transform (zero padding to fft_size).
inline std::vector<double> dft_power(const std::vector<double>& x, int fft_size) {
  std::vector<double> power(fft_size / 2 + 1, 0.0);
  for (int k = 0; k <= fft_size / 2; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t n = 0; n < x.size(); ++n) {
      double ang = -2.0 * std::numbers::pi * k * static_cast<double>(n) / fft_size;
      acc += x[n] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    power[k] = std::norm(acc);
  }
  return power;
}

/// Plain Levenshtein distance, no traceback.
inline int edit_distance(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i)
    for (size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                          d[i - 1][j] + 1, d[i][j - 1] + 1});
  return d[a.size()][b.size()];
}

/// Exhaustive enumeration of every complete frame-aligned path through a
/// decoding graph: emitting arcs consume one frame, epsilon arcs none,
/// paths must stand on a final node after the last frame. Feasible only
/// for tiny graphs and frame counts.
struct EnumResult {
  double score = voxkit::kLogZero;
  std::vector<std::string> words;
  bool found = false;
};

inline void enumerate_paths(const voxkit::DecodingGraph& graph,
                            const std::vector<const voxkit::HmmState*>& states,
                            const voxkit::FeatureMatrix& feats,
                            double acoustic_scale, int node, int frame,
                            double score, std::vector<std::string>& words,
                            int eps_chain, EnumResult* best) {
  const int T = feats.num_frames();
  if (frame == T) {
    auto it = graph.finals.find(node);
    if (it != graph.finals.end()) {
      double total = score + it->second;
      if (!best->found || total > best->score + 1e-12 ||
          (std::abs(total - best->score) <= 1e-12 && words < best->words)) {
        best->found = true;
        best->score = total;
        best->words = words;
      }
    }
  }
  if (eps_chain > graph.num_nodes) return;  // epsilon runaway guard
  for (int ai : graph.out[node]) {
    const voxkit::Arc& a = graph.arcs[ai];
    bool emitted = a.input != voxkit::kEpsilon;
    if (emitted && frame >= T) continue;
    double add = a.weight;
    if (emitted)
      add += acoustic_scale *
             voxkit::gmm_log_likelihood(states[a.input]->gmm, feats.rows[frame]);
    if (a.output != voxkit::kEpsilon) words.push_back(graph.words[a.output]);
    enumerate_paths(graph, states, feats, acoustic_scale, a.target,
                    frame + (emitted ? 1 : 0), score + add, words,
                    emitted ? 0 : eps_chain + 1, best);
    if (a.output != voxkit::kEpsilon) words.pop_back();
  }
}

inline EnumResult best_path_by_enumeration(const voxkit::DecodingGraph& graph,
                                           const voxkit::AcousticModelSet& models,
                                           const voxkit::FeatureMatrix& feats,
                                           double acoustic_scale) {
  EnumResult best;
  std::vector<std::string> words;
  std::vector<const voxkit::HmmState*> states = models.state_index();
  enumerate_paths(graph, states, feats, acoustic_scale, graph.start, 0, 0.0,
                  words, 0, &best);
  return best;
}

/// Dense fixed-point iteration for TextRank scores, indexed adjacency
/// matrix instead of the library's string maps.
inline std::vector<double> power_iteration(const std::vector<std::vector<double>>& w,
                                           double damping, int iterations) {
  const size_t n = w.size();
  std::vector<double> score(n, 1.0), outsum(n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) outsum[i] += w[i][j];
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> next(n);
    for (size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (size_t u = 0; u < n; ++u)
        if (w[u][v] > 0 && outsum[u] > 0) acc += w[u][v] * score[u] / outsum[u];
      next[v] = (1.0 - damping) + damping * acc;
    }
    score = std::move(next);
  }
  return score;
}

/// Unique scratch directory under the system temp dir.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    auto base = std::filesystem::temp_directory_path();
    path_ = base / ("voxkit_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace oracle

#endif  // VOXKIT_TESTS_HELPERS_HPP_
