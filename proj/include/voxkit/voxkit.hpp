// voxkit/voxkit.hpp  --  umbrella include
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

#ifndef VOXKIT_VOXKIT_HPP_
#define VOXKIT_VOXKIT_HPP_

#include "voxkit/acoustic_model.hpp"
#include "voxkit/audio.hpp"
#include "voxkit/common.hpp"
#include "voxkit/decode_graph.hpp"
#include "voxkit/decoder.hpp"
#include "voxkit/eval.hpp"
#include "voxkit/features.hpp"
#include "voxkit/keywords.hpp"
#include "voxkit/language_model.hpp"
#include "voxkit/lexicon.hpp"
#include "voxkit/sentiment.hpp"
#include "voxkit/text.hpp"

#endif  // VOXKIT_VOXKIT_HPP_
