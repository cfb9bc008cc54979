// tests/toy_asr.hpp  --  randomized miniature ASR instances (tiny lexicon,
// tiny LM, K=1 models, a handful of frames) for decoder equivalence checks
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

#ifndef VOXKIT_TESTS_TOY_ASR_HPP_
#define VOXKIT_TESTS_TOY_ASR_HPP_

#include <random>

#include "voxkit/decoder.hpp"

namespace toy {

struct ToyInstance {
  voxkit::Lexicon lexicon;
  voxkit::ArpaModel lm;
  voxkit::AcousticModelSet models;
  voxkit::DecodingGraph graph;
  voxkit::FeatureMatrix features;
};

/// Random vocabulary of at most `max_words` words over short
/// pronunciations, a tiny trained LM, K=1 models with random means,
/// random features of at most `max_frames` frames.
inline ToyInstance make_toy(uint32_t seed, int max_words = 3, int max_frames = 8,
                            bool with_silence = false) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const std::vector<std::string> phone_pool{"AH", "B", "K", "OW"};
  const std::vector<std::string> word_pool{"ba", "ko", "abba"};

  ToyInstance inst;
  int num_words = 1 + static_cast<int>(rng() % max_words);
  std::string dict_text;
  std::vector<std::string> words;
  for (int w = 0; w < num_words; ++w) {
    std::string word = word_pool[w];
    int len = 1 + static_cast<int>(rng() % 2);
    dict_text += word;
    for (int p = 0; p < len; ++p)
      dict_text += " " + phone_pool[rng() % phone_pool.size()];
    dict_text += "\n";
    words.push_back(word);
  }
  std::set<std::string> phones(phone_pool.begin(), phone_pool.end());
  phones.insert("SIL");
  inst.lexicon = voxkit::parse_dict(dict_text, phones);

  std::vector<std::vector<std::string>> corpus;
  int sentences = 2 + static_cast<int>(rng() % 4);
  for (int s = 0; s < sentences; ++s) {
    std::vector<std::string> sent;
    int len = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < len; ++i) sent.push_back(words[rng() % words.size()]);
    corpus.push_back(std::move(sent));
  }
  inst.lm = voxkit::train_ngram(corpus, 1 + static_cast<int>(rng() % 2), 0.5);

  std::vector<std::string> model_phones(phone_pool);
  model_phones.push_back("SIL");
  inst.models = voxkit::make_flat_model_set(model_phones, 2);
  for (auto& [name, hmm] : inst.models.phones)
    for (auto& st : hmm.states) {
      st.gmm.means[0] = {u(rng), u(rng)};
      st.gmm.vars[0] = {0.5 + 0.4 * std::abs(u(rng)), 0.6};
    }

  voxkit::GraphOptions opt;
  opt.optional_silence = with_silence;
  inst.graph = voxkit::build_graph(inst.lexicon, inst.lm, inst.models, opt);

  int frames = 3 + static_cast<int>(rng() % (max_frames - 2));
  for (int t = 0; t < frames; ++t)
    inst.features.rows.push_back({u(rng), u(rng)});
  return inst;
}

}  // namespace toy

#endif  // VOXKIT_TESTS_TOY_ASR_HPP_
