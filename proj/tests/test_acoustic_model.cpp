// tests/test_acoustic_model.cpp
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

#include <functional>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "voxkit/acoustic_model.hpp"

using namespace voxkit;

namespace {

Gmm single_gaussian(std::vector<double> mean, std::vector<double> var) {
  Gmm g;
  g.weights = {1.0};
  g.means = {std::move(mean)};
  g.vars = {std::move(var)};
  return g;
}

std::vector<std::vector<double>> gaussian_frames(size_t n, double mean,
                                                 double stddev, uint32_t seed,
                                                 int dim = 1) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(mean, stddev);
  std::vector<std::vector<double>> frames(n, std::vector<double>(dim));
  for (auto& f : frames)
    for (auto& x : f) x = g(rng);
  return frames;
}

/// Exhaustive max over all monotone no-skip state paths that start in the
/// first chain state, end in the last, and visit every state.
double brute_force_alignment_score(const FeatureMatrix& feats,
                                   const std::vector<const HmmState*>& chain) {
  const int T = feats.num_frames();
  const int S = static_cast<int>(chain.size());
  double best = kLogZero;
  // path encoded by the frame indices where the state advances
  std::vector<int> advance(S - 1);
  std::function<void(int, int)> rec = [&](int k, int from) {
    if (k == S - 1) {
      double score = 0.0;
      int j = 0;
      for (int t = 0; t < T; ++t) {
        bool advanced = j < S - 1 && advance[j] == t;
        if (t > 0) {
          if (advanced)
            score += std::log(chain[j]->forward);
          else
            score += std::log(chain[j]->self_loop);
        }
        if (advanced) ++j;
        score += gmm_log_likelihood(chain[j]->gmm, feats.rows[t]);
      }
      if (j == S - 1) best = std::max(best, score);
      return;
    }
    for (int t = from; t <= T - (S - 1 - k); ++t) {
      advance[k] = t;
      rec(k + 1, t + 1);
    }
  };
  if (S == 1) {
    double score = gmm_log_likelihood(chain[0]->gmm, feats.rows[0]);
    for (int t = 1; t < T; ++t)
      score += std::log(chain[0]->self_loop) +
               gmm_log_likelihood(chain[0]->gmm, feats.rows[t]);
    return score;
  }
  rec(0, 1);
  return best;
}

}  // namespace

TEST_CASE("single Gaussian log-likelihood at and away from the mean") {
  Gmm g = single_gaussian({0.0}, {1.0});
  // ln(1/sqrt(2*pi))
  CHECK_THAT(gmm_log_likelihood(g, {0.0}),
             Catch::Matchers::WithinAbs(-0.918939, 1e-6));
  CHECK_THAT(gmm_log_likelihood(g, {3.0}),
             Catch::Matchers::WithinAbs(-0.918939 - 4.5, 1e-6));
}

TEST_CASE("a mixture of identical components scores like one component") {
  Gmm one = single_gaussian({0.5, -1.0}, {1.0, 2.0});
  Gmm two;
  two.weights = {0.5, 0.5};
  two.means = {one.means[0], one.means[0]};
  two.vars = {one.vars[0], one.vars[0]};
  for (double x : {-2.0, 0.0, 0.7}) {
    std::vector<double> v{x, x};
    CHECK_THAT(gmm_log_likelihood(two, v),
               Catch::Matchers::WithinAbs(gmm_log_likelihood(one, v), 1e-12));
  }
}

TEST_CASE("log-likelihood rejects dimension mismatches and stays finite") {
  Gmm g = single_gaussian({0.0, 0.0}, {1.0, 1.0});
  CHECK_THROWS_WITH(gmm_log_likelihood(g, {1.0}),
                    Catch::Matchers::ContainsSubstring("dimension"));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    double ll = gmm_log_likelihood(g, {u(rng), u(rng)});
    CHECK(std::isfinite(ll));
  }
}

TEST_CASE("density integrates to one on a wide grid (D=1, several K)") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int K : {1, 2, 4}) {
    Gmm g;
    double wsum = 0.0;
    for (int k = 0; k < K; ++k) {
      double w = 0.2 + u(rng);
      g.weights.push_back(w);
      wsum += w;
      g.means.push_back({4.0 * u(rng) - 2.0});
      g.vars.push_back({0.3 + u(rng)});
    }
    for (double& w : g.weights) w /= wsum;
    double lo = -30.0, hi = 30.0;
    int steps = 30000;
    double h = (hi - lo) / steps, integral = 0.0;
    for (int i = 0; i <= steps; ++i) {
      double x = lo + i * h;
      double f = std::exp(gmm_log_likelihood(g, {x}));
      integral += (i == 0 || i == steps) ? f / 2 : f;
    }
    integral *= h;
    CHECK_THAT(integral, Catch::Matchers::WithinAbs(1.0, 1e-3));
  }
}

TEST_CASE("perturbing a variance component changes the result continuously") {
  Gmm g = single_gaussian({0.0}, {1.0});
  double base = gmm_log_likelihood(g, {0.7});
  g.vars[0][0] = 1.0 + 1e-7;
  CHECK_THAT(gmm_log_likelihood(g, {0.7}),
             Catch::Matchers::WithinAbs(base, 1e-6));
}

TEST_CASE("train_gmm recovers the mean of a single Gaussian") {
  const size_t N = 2000;
  auto frames = gaussian_frames(N, 1.5, 0.7, 21);
  GmmTrainResult r = train_gmm(frames, 1);
  // within 3*sigma/sqrt(N) of the true mean
  CHECK_THAT(r.gmm.means[0][0],
             Catch::Matchers::WithinAbs(1.5, 3.0 * 0.7 / std::sqrt(N)));
  CHECK(r.gmm.vars[0][0] > 0.3);
  CHECK(r.gmm.vars[0][0] < 0.8);
}

TEST_CASE("train_gmm separates two well-separated clusters") {
  auto a = gaussian_frames(1000, -4.0, 0.3, 31);
  auto b = gaussian_frames(1000, 4.0, 0.3, 32);
  std::vector<std::vector<double>> frames = a;
  frames.insert(frames.end(), b.begin(), b.end());
  GmmTrainResult r = train_gmm(frames, 2);
  std::vector<double> means{r.gmm.means[0][0], r.gmm.means[1][0]};
  std::sort(means.begin(), means.end());
  double sa = 0, sb = 0;
  for (const auto& f : a) sa += f[0];
  for (const auto& f : b) sb += f[0];
  CHECK_THAT(means[0], Catch::Matchers::WithinAbs(sa / a.size(), 1e-2));
  CHECK_THAT(means[1], Catch::Matchers::WithinAbs(sb / b.size(), 1e-2));
  CHECK_THAT(r.gmm.weights[0], Catch::Matchers::WithinAbs(0.5, 0.05));
}

TEST_CASE("EM total log-likelihood is non-decreasing on three seeds") {
  for (uint32_t seed : {101u, 202u, 303u}) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<std::vector<double>> frames(600, std::vector<double>(2));
    for (auto& f : frames) {
      f[0] = u(rng);
      f[1] = 0.5 * u(rng) + (u(rng) > 0 ? 2.0 : -2.0);
    }
    GmmTrainOptions opt;
    opt.seed = seed;
    opt.min_gain_per_frame = 0.0;  // run all iterations
    GmmTrainResult r = train_gmm(frames, 3, opt);
    REQUIRE(r.log_likelihood_history.size() >= 2);
    for (size_t i = 1; i < r.log_likelihood_history.size(); ++i)
      CHECK(r.log_likelihood_history[i] >=
            r.log_likelihood_history[i - 1] - 1e-9);
  }
}

TEST_CASE("train_gmm enforces the K*D data precondition") {
  auto frames = gaussian_frames(5, 0.0, 1.0, 41, 3);
  CHECK_THROWS_WITH(train_gmm(frames, 2),  // needs 2*3=6 frames
                    Catch::Matchers::ContainsSubstring("insufficient"));
}

TEST_CASE("flat_start_align forces one frame per state when counts match") {
  AcousticModelSet set = make_flat_model_set({"A"}, 1);
  // distinct means so the assignment is driven by emissions
  for (int k = 0; k < 3; ++k)
    set.phones["A"].states[k].gmm = single_gaussian({k * 2.0}, {0.5});
  FeatureMatrix feats;
  feats.rows = {{0.0}, {2.0}, {4.0}};
  AlignmentResult r = flat_start_align(feats, {"A"}, set);
  CHECK(r.state_ids == std::vector<int>{set.state_id("A", 0), set.state_id("A", 1),
                                        set.state_id("A", 2)});

  FeatureMatrix tiny;
  tiny.rows = {{0.0}, {1.0}};
  CHECK_THROWS_WITH(flat_start_align(tiny, {"A"}, set),
                    Catch::Matchers::ContainsSubstring("too short"));
}

TEST_CASE("uniform emissions leave the assignment to the transitions") {
  AcousticModelSet set = make_flat_model_set({"A", "B"}, 1);
  // sticky first state, eager rest
  set.phones["A"].states[0].self_loop = 0.9;
  set.phones["A"].states[0].forward = 0.1;
  for (auto& [name, hmm] : set.phones)
    for (auto& st : hmm.states) st.gmm = single_gaussian({0.0}, {1.0});

  FeatureMatrix feats;
  for (int t = 0; t < 9; ++t) feats.rows.push_back({0.4});

  AlignmentResult got = flat_start_align(feats, {"A", "B"}, set);
  std::vector<const HmmState*> chain;
  for (const char* p : {"A", "B"})
    for (int k = 0; k < 3; ++k) chain.push_back(&set.phones[p].states[k]);
  double brute = brute_force_alignment_score(feats, chain);
  CHECK_THAT(got.score, Catch::Matchers::WithinAbs(brute, 1e-9));
  // the sticky state should hold the extra frames
  int first_state_frames = 0;
  for (int id : got.state_ids)
    if (id == set.state_id("A", 0)) ++first_state_frames;
  CHECK(first_state_frames == 4);  // 9 frames, 6 states, extras stay where staying is cheap
}

TEST_CASE("alignment score equals the brute-force path maximum on random data") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    AcousticModelSet set = make_flat_model_set({"X"}, 2);
    for (int k = 0; k < 3; ++k)
      set.phones["X"].states[k].gmm =
          single_gaussian({u(rng), u(rng)}, {0.4 + 0.3 * (k + 1), 0.5});
    FeatureMatrix feats;
    int T = 4 + static_cast<int>(rng() % 5);
    for (int t = 0; t < T; ++t) feats.rows.push_back({u(rng), u(rng)});
    AlignmentResult got = flat_start_align(feats, {"X"}, set);
    std::vector<const HmmState*> chain;
    for (int k = 0; k < 3; ++k) chain.push_back(&set.phones["X"].states[k]);
    CHECK_THAT(got.score, Catch::Matchers::WithinAbs(
                              brute_force_alignment_score(feats, chain), 1e-9));
    // every chain state receives at least one frame
    for (int k = 0; k < 3; ++k)
      CHECK(std::count(got.state_ids.begin(), got.state_ids.end(),
                       set.state_id("X", k)) >= 1);
  }
}

TEST_CASE("train_gmm_set retrains every state and demands data for each") {
  AcousticModelSet topology = make_flat_model_set({"A", "SIL"}, 2);
  std::map<int, std::vector<std::vector<double>>> frames;
  std::mt19937 rng(61);
  std::normal_distribution<double> g(0.0, 0.4);
  for (int id = 0; id < topology.num_states(); ++id) {
    double center = 2.0 * id;
    for (int i = 0; i < 30; ++i)
      frames[id].push_back({center + g(rng), g(rng)});
  }
  AcousticModelSet trained = train_gmm_set(frames, topology, 1);
  for (int id = 0; id < trained.num_states(); ++id) {
    auto [phone, k] = trained.state_info(id);
    const Gmm& gm = trained.phones.at(phone).states[k].gmm;
    CHECK_THAT(gm.means[0][0], Catch::Matchers::WithinAbs(2.0 * id, 0.5));
    // transitions are untouched by GMM re-estimation
    CHECK(trained.phones.at(phone).states[k].self_loop ==
          topology.phones.at(phone).states[k].self_loop);
  }

  frames.erase(topology.state_id("SIL", 1));
  CHECK_THROWS_WITH(train_gmm_set(frames, topology, 1),
                    Catch::Matchers::ContainsSubstring("SIL:1"));
  frames[topology.state_id("SIL", 1)] = {{0.0, 0.0}};  // one frame < K*D
  CHECK_THROWS_WITH(train_gmm_set(frames, topology, 1),
                    Catch::Matchers::ContainsSubstring("insufficient"));
}

TEST_CASE("Viterbi training never decreases the total alignment score") {
  std::mt19937 rng(55);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<TrainingUtterance> utts;
  for (int u = 0; u < 6; ++u) {
    TrainingUtterance tu;
    tu.phone_chain = {"SIL", "A", "B", "SIL"};
    int frames_per_state = 4;
    for (size_t p = 0; p < tu.phone_chain.size(); ++p)
      for (int k = 0; k < 3; ++k)
        for (int f = 0; f < frames_per_state; ++f) {
          double center = (p * 3.0 + k) * 1.5;
          tu.features.rows.push_back({center + 0.2 * g(rng), 0.2 * g(rng)});
        }
    utts.push_back(std::move(tu));
  }
  AmTrainOptions opt;
  opt.num_components = 1;
  opt.realign_iterations = 4;
  AmTrainResult r = train_acoustic_model(utts, {"SIL", "A", "B"}, opt);
  REQUIRE(r.alignment_scores.size() >= 2);
  for (size_t i = 1; i < r.alignment_scores.size(); ++i)
    CHECK(r.alignment_scores[i] >= r.alignment_scores[i - 1] - 1e-6);
  r.models.validate();
}

TEST_CASE("model files round-trip losslessly at nine significant digits") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  AcousticModelSet set = make_flat_model_set({"AA", "B", "SIL"}, 3);
  for (auto& [name, hmm] : set.phones)
    for (auto& st : hmm.states) {
      st.gmm.weights = {0.3, 0.7};
      st.gmm.means = {{u(rng), -u(rng), u(rng)}, {u(rng), u(rng), -u(rng)}};
      st.gmm.vars = {{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
      double s = 0.2 + 0.25 * u(rng);  // stays inside (0,1)
      st.self_loop = s;
      st.forward = 1.0 - s;
    }
  std::string text = write_model_set(set);
  std::istringstream is(text);
  AcousticModelSet back = read_model_set(is);
  REQUIRE(back.phones.size() == set.phones.size());
  // re-serialization is byte-identical, which pins 9-digit fidelity
  CHECK(write_model_set(back) == text);
  for (const auto& [name, hmm] : set.phones)
    for (int k = 0; k < 3; ++k) {
      const HmmState& a = hmm.states[k];
      const HmmState& b = back.phones.at(name).states[k];
      CHECK_THAT(b.self_loop, Catch::Matchers::WithinRel(a.self_loop, 1e-8));
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 3; ++d) {
          CHECK_THAT(b.gmm.means[c][d],
                     Catch::Matchers::WithinRel(a.gmm.means[c][d], 1e-8));
          CHECK_THAT(b.gmm.vars[c][d],
                     Catch::Matchers::WithinRel(a.gmm.vars[c][d], 1e-8));
        }
    }
}

TEST_CASE("model set invariants are enforced") {
  AcousticModelSet set = make_flat_model_set({"A", "SIL"}, 2);
  set.validate();
  CHECK(set.num_states() == 6);
  // silence gets the sticky self-loop by default
  CHECK_THAT(set.phones["SIL"].states[0].self_loop,
             Catch::Matchers::WithinAbs(0.9, 1e-12));
  CHECK_THAT(set.phones["A"].states[0].self_loop,
             Catch::Matchers::WithinAbs(0.5, 1e-12));
  // state ids are unique and dense
  std::set<int> ids;
  for (const auto& [name, _] : set.phones)
    for (int k = 0; k < 3; ++k) ids.insert(set.state_id(name, k));
  CHECK(ids.size() == 6);
  CHECK(*ids.begin() == 0);
  CHECK(*ids.rbegin() == 5);

  set.phones["A"].states[0].self_loop = 0.8;  // breaks sum-to-one
  CHECK_THROWS_AS(set.validate(), Error);
}
