// voxkit/acoustic_model.hpp  --  3-state phone HMMs with diagonal GMM states
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

#ifndef VOXKIT_ACOUSTIC_MODEL_HPP_
#define VOXKIT_ACOUSTIC_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"
#include "voxkit/features.hpp"

namespace voxkit {

inline const std::string kSilencePhone = "SIL";
constexpr int kStatesPerPhone = 3;
constexpr double kDefaultVarianceFloor = 1e-4;

/// Diagonal-covariance Gaussian mixture.
struct Gmm {
  std::vector<double> weights;
  std::vector<std::vector<double>> means;  // component x dim
  std::vector<std::vector<double>> vars;   // component x dim

  int num_components() const { return static_cast<int>(weights.size()); }
  int dim() const { return means.empty() ? 0 : static_cast<int>(means[0].size()); }

  static Gmm unit(int dim) {
    Gmm g;
    g.weights = {1.0};
    g.means.assign(1, std::vector<double>(dim, 0.0));
    g.vars.assign(1, std::vector<double>(dim, 1.0));
    return g;
  }

  void validate(double variance_floor = kDefaultVarianceFloor) const {
    if (weights.empty() || means.size() != weights.size() ||
        vars.size() != weights.size())
      throw Error("Gmm: inconsistent component counts");
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0) throw Error("Gmm: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw Error("Gmm: weights do not sum to 1");
    for (const auto& v : vars)
      for (double x : v)
        if (x < variance_floor - 1e-15) throw Error("Gmm: variance below floor");
  }
};

/// ln sum_k c_k prod_d N(x_d; mu_kd, var_kd), via log-sum-exp.
inline double gmm_log_likelihood(const Gmm& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.dim())
    throw Error("gmm_log_likelihood: dimension mismatch (" +
                std::to_string(x.size()) + " vs " + std::to_string(g.dim()) + ")");
  constexpr double kLog2Pi = 1.8378770664093453;  // ln(2*pi)
  double best = kLogZero;
  std::vector<double> comp(g.weights.size());
  for (size_t k = 0; k < g.weights.size(); ++k) {
    double acc = g.weights[k] > 0 ? std::log(g.weights[k]) : kLogZero;
    if (acc != kLogZero) {
      const auto& mu = g.means[k];
      const auto& var = g.vars[k];
      for (size_t d = 0; d < x.size(); ++d) {
        double diff = x[d] - mu[d];
        acc += -0.5 * (kLog2Pi + std::log(var[d])) - diff * diff / (2.0 * var[d]);
      }
    }
    comp[k] = acc;
    best = std::max(best, acc);
  }
  if (best == kLogZero) return kLogZero;
  double s = 0.0;
  for (double c : comp) s += std::exp(c - best);
  return best + std::log(s);
}

/// One emitting HMM state: its output density plus the two outgoing
/// transition probabilities of the left-to-right topology.
struct HmmState {
  Gmm gmm;
  double self_loop = 0.5;
  double forward = 0.5;
};

struct PhoneHmm {
  std::string phone;
  std::vector<HmmState> states;  // exactly kStatesPerPhone

  void validate() const {
    if (static_cast<int>(states.size()) != kStatesPerPhone)
      throw Error("PhoneHmm '" + phone + "': needs exactly 3 states");
    for (const auto& s : states) {
      if (s.self_loop < 0 || s.forward < 0 ||
          std::abs(s.self_loop + s.forward - 1.0) > 1e-9)
        throw Error("PhoneHmm '" + phone + "': transitions must sum to 1");
      s.gmm.validate();
    }
  }
};

/// Phone-indexed model set. Global emitting-state ids are assigned in
/// sorted phone order, three per phone, so id = 3*phone_rank + state.
struct AcousticModelSet {
  std::map<std::string, PhoneHmm> phones;

  int num_states() const { return kStatesPerPhone * static_cast<int>(phones.size()); }

  int state_id(const std::string& phone, int state) const {
    auto it = phones.find(phone);
    if (it == phones.end()) throw Error("no model for phone '" + phone + "'");
    int rank = static_cast<int>(std::distance(phones.begin(), it));
    return kStatesPerPhone * rank + state;
  }

  std::pair<std::string, int> state_info(int id) const {
    if (id < 0 || id >= num_states()) throw Error("bad state id");
    auto it = phones.begin();
    std::advance(it, id / kStatesPerPhone);
    return {it->first, id % kStatesPerPhone};
  }

  const HmmState& state(int id) const {
    if (id < 0 || id >= num_states()) throw Error("bad state id");
    auto it = phones.begin();
    std::advance(it, id / kStatesPerPhone);
    return it->second.states[id % kStatesPerPhone];
  }

  /// Flat index for tight loops: pointer per global state id.
  std::vector<const HmmState*> state_index() const {
    std::vector<const HmmState*> out;
    out.reserve(num_states());
    for (const auto& [_, hmm] : phones)
      for (const auto& s : hmm.states) out.push_back(&s);
    return out;
  }

  int dim() const {
    return phones.empty() ? 0 : phones.begin()->second.states[0].gmm.dim();
  }

  void validate() const {
    for (const auto& [name, hmm] : phones) {
      if (name != hmm.phone) throw Error("phone key/name mismatch");
      hmm.validate();
    }
  }
};

/// Flat-start set: unit single-Gaussian states, 0.5/0.5 transitions,
/// silence with a stickier 0.9 self-loop.
inline AcousticModelSet make_flat_model_set(const std::vector<std::string>& phones,
                                            int dim,
                                            double silence_self_loop = 0.9) {
  AcousticModelSet set;
  for (const auto& p : phones) {
    PhoneHmm hmm;
    hmm.phone = p;
    hmm.states.resize(kStatesPerPhone);
    for (auto& s : hmm.states) {
      s.gmm = Gmm::unit(dim);
      if (p == kSilencePhone) {
        s.self_loop = silence_self_loop;
        s.forward = 1.0 - silence_self_loop;
      }
    }
    set.phones[p] = std::move(hmm);
  }
  return set;
}

// ---------------------------------------------------------------------------
// GMM training: k-means initialization, then EM

struct GmmTrainOptions {
  int max_iterations = 20;
  double min_gain_per_frame = 1e-4;
  double variance_floor = kDefaultVarianceFloor;
  int kmeans_iterations = 10;
  uint32_t seed = 1;
};

struct GmmTrainResult {
  Gmm gmm;
  std::vector<double> log_likelihood_history;  // total data LL, init + per iteration
};

namespace detail {

inline double total_log_likelihood(const Gmm& g,
                                   const std::vector<std::vector<double>>& frames) {
  double total = 0.0;
  for (const auto& x : frames) total += gmm_log_likelihood(g, x);
  return total;
}

inline Gmm kmeans_init(const std::vector<std::vector<double>>& frames, int K,
                       const GmmTrainOptions& opt) {
  const int D = static_cast<int>(frames[0].size());
  const size_t N = frames.size();
  std::mt19937 rng(opt.seed);

  auto sqdist = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (int d = 0; d < D; ++d) {
      double diff = a[d] - b[d];
      s += diff * diff;
    }
    return s;
  };

  // k-means++ seeding
  std::vector<std::vector<double>> centers;
  centers.push_back(frames[rng() % N]);
  std::vector<double> dist(N);
  while (static_cast<int>(centers.size()) < K) {
    double total = 0.0;
    for (size_t i = 0; i < N; ++i) {
      double best = sqdist(frames[i], centers[0]);
      for (size_t c = 1; c < centers.size(); ++c)
        best = std::min(best, sqdist(frames[i], centers[c]));
      dist[i] = best;
      total += best;
    }
    if (total <= 0.0) {
      centers.push_back(frames[rng() % N]);  // all points identical
      continue;
    }
    std::uniform_real_distribution<double> u(0.0, total);
    double pick = u(rng), acc = 0.0;
    size_t chosen = N - 1;
    for (size_t i = 0; i < N; ++i) {
      acc += dist[i];
      if (acc >= pick) {
        chosen = i;
        break;
      }
    }
    centers.push_back(frames[chosen]);
  }

  std::vector<int> assign(N, 0);
  for (int iter = 0; iter < opt.kmeans_iterations; ++iter) {
    bool changed = false;
    for (size_t i = 0; i < N; ++i) {
      int best = 0;
      double bd = sqdist(frames[i], centers[0]);
      for (int c = 1; c < K; ++c) {
        double d = sqdist(frames[i], centers[c]);
        if (d < bd) {
          bd = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    std::vector<std::vector<double>> sums(K, std::vector<double>(D, 0.0));
    std::vector<int> counts(K, 0);
    for (size_t i = 0; i < N; ++i) {
      ++counts[assign[i]];
      for (int d = 0; d < D; ++d) sums[assign[i]][d] += frames[i][d];
    }
    for (int c = 0; c < K; ++c)
      if (counts[c] > 0)
        for (int d = 0; d < D; ++d) centers[c][d] = sums[c][d] / counts[c];
    if (!changed) break;
  }

  Gmm g;
  g.weights.assign(K, 0.0);
  g.means = centers;
  g.vars.assign(K, std::vector<double>(D, 0.0));
  std::vector<int> counts(K, 0);
  for (size_t i = 0; i < N; ++i) {
    int c = assign[i];
    ++counts[c];
    for (int d = 0; d < D; ++d) {
      double diff = frames[i][d] - g.means[c][d];
      g.vars[c][d] += diff * diff;
    }
  }
  for (int c = 0; c < K; ++c) {
    g.weights[c] = std::max(1.0, static_cast<double>(counts[c])) / N;
    for (int d = 0; d < D; ++d)
      g.vars[c][d] = std::max(counts[c] > 0 ? g.vars[c][d] / counts[c] : 1.0,
                              opt.variance_floor);
  }
  double wsum = 0.0;
  for (double w : g.weights) wsum += w;
  for (double& w : g.weights) w /= wsum;
  return g;
}

}  // namespace detail

/// EM until the per-frame log-likelihood gain drops below
/// min_gain_per_frame or max_iterations is reached. The history records the
/// total data log-likelihood after initialization and after each update;
/// it is non-decreasing whenever the variance floor stays inactive.
inline GmmTrainResult train_gmm(const std::vector<std::vector<double>>& frames,
                                int K, const GmmTrainOptions& opt = {}) {
  if (K < 1) throw Error("train_gmm: K must be >= 1");
  if (frames.empty()) throw Error("train_gmm: no frames");
  const int D = static_cast<int>(frames[0].size());
  const size_t N = frames.size();
  if (N < static_cast<size_t>(K) * static_cast<size_t>(D))
    throw Error("train_gmm: insufficient data (" + std::to_string(N) +
                " frames for K=" + std::to_string(K) + ", D=" +
                std::to_string(D) + ")");

  GmmTrainResult result;
  result.gmm = detail::kmeans_init(frames, K, opt);
  double prev = detail::total_log_likelihood(result.gmm, frames);
  result.log_likelihood_history.push_back(prev);

  std::vector<double> comp(K);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    Gmm& g = result.gmm;
    std::vector<double> occ(K, 0.0);
    std::vector<std::vector<double>> mean_acc(K, std::vector<double>(D, 0.0));
    std::vector<std::vector<double>> var_acc(K, std::vector<double>(D, 0.0));
    for (const auto& x : frames) {
      double lse = kLogZero;
      for (int k = 0; k < K; ++k) {
        double acc = g.weights[k] > 0 ? std::log(g.weights[k]) : kLogZero;
        if (acc != kLogZero)
          for (int d = 0; d < D; ++d) {
            double diff = x[d] - g.means[k][d];
            acc += -0.5 * (1.8378770664093453 + std::log(g.vars[k][d])) -
                   diff * diff / (2.0 * g.vars[k][d]);
          }
        comp[k] = acc;
        lse = log_add(lse, acc);
      }
      for (int k = 0; k < K; ++k) {
        if (comp[k] == kLogZero) continue;
        double r = std::exp(comp[k] - lse);
        occ[k] += r;
        for (int d = 0; d < D; ++d) {
          mean_acc[k][d] += r * x[d];
          var_acc[k][d] += r * x[d] * x[d];
        }
      }
    }
    for (int k = 0; k < K; ++k) {
      if (occ[k] < 1e-8) continue;  // starved component keeps old parameters
      for (int d = 0; d < D; ++d) {
        double mu = mean_acc[k][d] / occ[k];
        g.means[k][d] = mu;
        g.vars[k][d] = std::max(var_acc[k][d] / occ[k] - mu * mu, opt.variance_floor);
      }
      g.weights[k] = occ[k] / static_cast<double>(N);
    }
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    for (double& w : g.weights) w /= wsum;

    double ll = detail::total_log_likelihood(g, frames);
    result.log_likelihood_history.push_back(ll);
    if ((ll - prev) / static_cast<double>(N) < opt.min_gain_per_frame) break;
    prev = ll;
  }
  result.gmm.validate(opt.variance_floor);
  return result;
}

/// Re-estimates every state's GMM from its aligned frames. Topology
/// (phones, transitions) is taken from `topology`; each global state id
/// must have at least K*D frames.
inline AcousticModelSet train_gmm_set(
    const std::map<int, std::vector<std::vector<double>>>& frames_per_state,
    const AcousticModelSet& topology, int K, const GmmTrainOptions& opt = {}) {
  AcousticModelSet out = topology;
  for (int id = 0; id < topology.num_states(); ++id) {
    auto it = frames_per_state.find(id);
    auto [phone, k] = topology.state_info(id);
    if (it == frames_per_state.end() || it->second.empty())
      throw Error("train_gmm_set: no frames for state " + phone + ":" +
                  std::to_string(k));
    GmmTrainOptions o = opt;
    o.seed = opt.seed + static_cast<uint32_t>(id);  // decorrelate states
    try {
      out.phones[phone].states[k].gmm = train_gmm(it->second, K, o).gmm;
    } catch (const Error& e) {
      throw Error("state " + phone + ":" + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// forced alignment

struct AlignmentResult {
  std::vector<int> state_ids;  // one global state id per frame
  double score = 0.0;          // natural-log path score
};

/// Viterbi alignment of frames to the left-to-right state chain of
/// `phone_sequence` (3 states per phone, no skips). Every chain state
/// receives at least one frame.
inline AlignmentResult flat_start_align(const FeatureMatrix& features,
                                        const std::vector<std::string>& phone_sequence,
                                        const AcousticModelSet& models) {
  if (phone_sequence.empty()) throw Error("flat_start_align: empty phone sequence");
  const int T = features.num_frames();
  std::vector<int> chain;  // global state ids, 3 per phone
  for (const auto& p : phone_sequence)
    for (int k = 0; k < kStatesPerPhone; ++k)
      chain.push_back(models.state_id(p, k));
  const int S = static_cast<int>(chain.size());
  if (T < S)
    throw Error("utterance too short for the phone chain (" + std::to_string(T) +
                " frames, " + std::to_string(S) + " states)");

  std::vector<const HmmState*> index = models.state_index();
  std::vector<std::vector<double>> emis(T, std::vector<double>(S));
  for (int t = 0; t < T; ++t)
    for (int j = 0; j < S; ++j)
      emis[t][j] = gmm_log_likelihood(index[chain[j]]->gmm, features.rows[t]);

  std::vector<std::vector<double>> score(T, std::vector<double>(S, kLogZero));
  std::vector<std::vector<int8_t>> from_prev(T, std::vector<int8_t>(S, 0));
  score[0][0] = emis[0][0];
  for (int t = 1; t < T; ++t) {
    for (int j = 0; j < S; ++j) {
      double stay = score[t - 1][j] == kLogZero
                        ? kLogZero
                        : score[t - 1][j] + std::log(index[chain[j]]->self_loop);
      double advance = (j > 0 && score[t - 1][j - 1] != kLogZero)
                           ? score[t - 1][j - 1] + std::log(index[chain[j - 1]]->forward)
                           : kLogZero;
      if (advance > stay) {
        score[t][j] = advance + emis[t][j];
        from_prev[t][j] = 1;
      } else if (stay != kLogZero) {
        score[t][j] = stay + emis[t][j];
      }
    }
  }

  AlignmentResult result;
  result.score = score[T - 1][S - 1];
  if (result.score == kLogZero) throw Error("flat_start_align: no valid path");
  result.state_ids.resize(T);
  int j = S - 1;
  for (int t = T - 1; t >= 0; --t) {
    result.state_ids[t] = chain[j];
    if (t > 0 && from_prev[t][j]) --j;
  }
  return result;
}

/// Equal-partition assignment used to bootstrap the very first training
/// pass, when all states are still identical.
inline std::vector<int> uniform_align(int num_frames,
                                      const std::vector<int>& chain_state_ids) {
  const int S = static_cast<int>(chain_state_ids.size());
  if (num_frames < S) throw Error("uniform_align: fewer frames than states");
  std::vector<int> out(num_frames);
  for (int t = 0; t < num_frames; ++t) {
    int j = static_cast<int>(static_cast<int64_t>(t) * S / num_frames);
    out[t] = chain_state_ids[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Viterbi training driver

struct TrainingUtterance {
  FeatureMatrix features;
  std::vector<std::string> phone_chain;  // including any silence padding
};

struct AmTrainOptions {
  int num_components = 4;
  int realign_iterations = 5;
  GmmTrainOptions gmm;
  double silence_self_loop = 0.9;
  double transition_smoothing = 1.0;  // add-one style smoothing counts
};

struct AmTrainResult {
  AcousticModelSet models;
  std::vector<double> alignment_scores;  // total over corpus, per iteration
  std::vector<std::string> warnings;     // e.g. states left un-updated
};

/// Flat start then align / re-estimate rounds. The total alignment score
/// is expected not to decrease across rounds. A state whose alignment
/// drops below the K*D frame minimum keeps its previous parameters for
/// that round (with a warning); a state with no frames at all is an error.
inline AmTrainResult train_acoustic_model(const std::vector<TrainingUtterance>& utts,
                                          const std::vector<std::string>& phone_inventory,
                                          const AmTrainOptions& opt = {}) {
  if (utts.empty()) throw Error("train_acoustic_model: no utterances");
  const int dim = utts[0].features.dim();
  AcousticModelSet models =
      make_flat_model_set(phone_inventory, dim, opt.silence_self_loop);

  auto chain_ids = [&](const TrainingUtterance& u) {
    std::vector<int> ids;
    for (const auto& p : u.phone_chain)
      for (int k = 0; k < kStatesPerPhone; ++k) ids.push_back(models.state_id(p, k));
    return ids;
  };

  AmTrainResult result;
  std::vector<std::vector<int>> alignments(utts.size());
  for (size_t i = 0; i < utts.size(); ++i)
    alignments[i] = uniform_align(utts[i].features.num_frames(), chain_ids(utts[i]));

  const size_t min_frames = static_cast<size_t>(opt.num_components) *
                            static_cast<size_t>(dim);
  for (int round = 0; round <= opt.realign_iterations; ++round) {
    // accumulate per-state frames and transition counts
    std::map<int, std::vector<std::vector<double>>> state_frames;
    std::map<int, std::pair<int64_t, int64_t>> trans;  // id -> (self, forward)
    for (size_t i = 0; i < utts.size(); ++i) {
      const auto& rows = utts[i].features.rows;
      const auto& ali = alignments[i];
      for (size_t t = 0; t < ali.size(); ++t) {
        state_frames[ali[t]].push_back(rows[t]);
        if (t + 1 < ali.size()) {
          if (ali[t + 1] == ali[t])
            ++trans[ali[t]].first;
          else
            ++trans[ali[t]].second;
        } else {
          ++trans[ali[t]].second;  // exits the chain
        }
      }
    }
    int updated = 0;
    for (int id = 0; id < models.num_states(); ++id) {
      auto [phone, k] = models.state_info(id);
      auto it = state_frames.find(id);
      size_t have = it == state_frames.end() ? 0 : it->second.size();
      if (have == 0)
        throw Error("train_acoustic_model: no frames for state " + phone + ":" +
                    std::to_string(k) + " (phone absent from the corpus?)");
      if (have < min_frames) {
        result.warnings.push_back("round " + std::to_string(round) + ": state " +
                                  phone + ":" + std::to_string(k) + " kept " +
                                  "previous parameters (" + std::to_string(have) +
                                  " < " + std::to_string(min_frames) + " frames)");
        continue;
      }
      GmmTrainOptions o = opt.gmm;
      o.seed = opt.gmm.seed + static_cast<uint32_t>(id);
      models.phones[phone].states[k].gmm =
          train_gmm(it->second, opt.num_components, o).gmm;
      ++updated;
    }
    if (updated == 0)
      throw Error("train_acoustic_model: every state is data-starved");
    for (auto& [name, hmm] : models.phones)
      for (int k = 0; k < kStatesPerPhone; ++k) {
        auto it = trans.find(models.state_id(name, k));
        if (it == trans.end()) continue;
        double self = static_cast<double>(it->second.first) + opt.transition_smoothing;
        double fwd = static_cast<double>(it->second.second) + opt.transition_smoothing;
        hmm.states[k].self_loop = self / (self + fwd);
        hmm.states[k].forward = fwd / (self + fwd);
      }

    double total = 0.0;
    for (size_t i = 0; i < utts.size(); ++i) {
      AlignmentResult ar =
          flat_start_align(utts[i].features, utts[i].phone_chain, models);
      alignments[i] = std::move(ar.state_ids);
      total += ar.score;
    }
    result.alignment_scores.push_back(total);
  }
  result.models = std::move(models);
  return result;
}

// ---------------------------------------------------------------------------
// model file format (text, 9 significant digits)

inline void write_model_set(const AcousticModelSet& set, std::ostream& os) {
  os << "voxkit-am 1\n";
  os << "phones " << set.phones.size() << "\n";
  bool first = true;
  for (const auto& [name, _] : set.phones) {
    if (!first) os << ' ';
    os << name;
    first = false;
  }
  os << "\n";
  int K = set.phones.empty()
              ? 0
              : set.phones.begin()->second.states[0].gmm.num_components();
  os << "components " << K << "\n";
  os << "dim " << set.dim() << "\n";
  for (const auto& [name, hmm] : set.phones) {
    os << "phone " << name << "\n";
    for (int k = 0; k < kStatesPerPhone; ++k) {
      const HmmState& s = hmm.states[k];
      os << "state " << k << "\n";
      os << "trans " << format_g9(s.self_loop) << ' ' << format_g9(s.forward) << "\n";
      os << "weights";
      for (double w : s.gmm.weights) os << ' ' << format_g9(w);
      os << "\n";
      for (int c = 0; c < s.gmm.num_components(); ++c) {
        os << "mean";
        for (double v : s.gmm.means[c]) os << ' ' << format_g9(v);
        os << "\nvar";
        for (double v : s.gmm.vars[c]) os << ' ' << format_g9(v);
        os << "\n";
      }
    }
  }
}

inline std::string write_model_set(const AcousticModelSet& set) {
  std::ostringstream ss;
  write_model_set(set, ss);
  return ss.str();
}

inline AcousticModelSet read_model_set(std::istream& is) {
  auto next_line = [&](const char* what) {
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) return line;
    }
    throw ParseError(std::string("model file truncated, expected ") + what);
  };
  auto expect_fields = [&](const std::string& line, const std::string& keyword)
      -> std::vector<std::string> {
    std::vector<std::string> f = split_fields(line);
    if (f.empty() || f[0] != keyword)
      throw ParseError("expected '" + keyword + "' line, got '" + line + "'");
    return f;
  };

  std::vector<std::string> f = expect_fields(next_line("header"), "voxkit-am");
  f = expect_fields(next_line("phones"), "phones");
  int num_phones = std::stoi(f[1]);
  std::vector<std::string> names = split_fields(next_line("phone list"));
  if (static_cast<int>(names.size()) != num_phones)
    throw ParseError("phone list length does not match declared count");
  f = expect_fields(next_line("components"), "components");
  f = expect_fields(next_line("dim"), "dim");
  const int dim = std::stoi(f[1]);

  auto parse_values = [&](const std::vector<std::string>& fields, size_t from) {
    std::vector<double> v;
    v.reserve(fields.size() - from);
    for (size_t i = from; i < fields.size(); ++i) {
      double x;
      if (!parse_double(fields[i], &x))
        throw ParseError("bad numeric field '" + fields[i] + "'");
      v.push_back(x);
    }
    return v;
  };

  AcousticModelSet set;
  for (int p = 0; p < num_phones; ++p) {
    f = expect_fields(next_line("phone"), "phone");
    PhoneHmm hmm;
    hmm.phone = f[1];
    hmm.states.resize(kStatesPerPhone);
    for (int k = 0; k < kStatesPerPhone; ++k) {
      expect_fields(next_line("state"), "state");
      f = expect_fields(next_line("trans"), "trans");
      std::vector<double> tr = parse_values(f, 1);
      if (tr.size() != 2) throw ParseError("trans line needs two values");
      HmmState& s = hmm.states[k];
      double tsum = tr[0] + tr[1];
      if (tsum <= 0) throw ParseError("bad transition probabilities");
      s.self_loop = tr[0] / tsum;
      s.forward = tr[1] / tsum;
      f = expect_fields(next_line("weights"), "weights");
      s.gmm.weights = parse_values(f, 1);
      double wsum = 0.0;
      for (double w : s.gmm.weights) wsum += w;
      if (wsum <= 0) throw ParseError("bad mixture weights");
      for (double& w : s.gmm.weights) w /= wsum;
      for (size_t c = 0; c < s.gmm.weights.size(); ++c) {
        f = expect_fields(next_line("mean"), "mean");
        s.gmm.means.push_back(parse_values(f, 1));
        f = expect_fields(next_line("var"), "var");
        s.gmm.vars.push_back(parse_values(f, 1));
        if (static_cast<int>(s.gmm.means.back().size()) != dim ||
            static_cast<int>(s.gmm.vars.back().size()) != dim)
          throw ParseError("mean/var row length does not match dim");
      }
    }
    std::string key = hmm.phone;
    set.phones[key] = std::move(hmm);
  }
  set.validate();
  return set;
}

inline AcousticModelSet load_model_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  return read_model_set(in);
}

inline void save_model_set(const AcousticModelSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file: " + path);
  write_model_set(set, out);
  if (!out) throw IoError("short write: " + path);
}

}  // namespace voxkit

#endif  // VOXKIT_ACOUSTIC_MODEL_HPP_
