// voxkit/audio.hpp  --  PCM loading and silence-based utterance splitting
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

#ifndef VOXKIT_AUDIO_HPP_
#define VOXKIT_AUDIO_HPP_

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "voxkit/common.hpp"

namespace voxkit {

/// Mono audio, samples normalized to [-1, 1) by dividing 16-bit integers
/// by 32768. Immutable by convention once built.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 16000;

  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// A chunk of a recording between pauses; times are relative to the
/// original buffer.
struct Utterance {
  AudioBuffer buffer;
  double start_time = 0.0;
  double end_time = 0.0;
};

inline std::vector<double> decode_pcm16le(const uint8_t* data, size_t bytes) {
  std::vector<double> out(bytes / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int16_t v = static_cast<int16_t>(static_cast<uint16_t>(data[2 * i]) |
                                     (static_cast<uint16_t>(data[2 * i + 1]) << 8));
    out[i] = v / 32768.0;
  }
  return out;
}

/// Inverse of decode_pcm16le up to int16 quantization; exact for buffers
/// that came from 16-bit sources.
inline std::vector<uint8_t> encode_pcm16le(const std::vector<double>& samples) {
  std::vector<uint8_t> out(samples.size() * 2);
  for (size_t i = 0; i < samples.size(); ++i) {
    double scaled = samples[i] * 32768.0;
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    int16_t v = static_cast<int16_t>(std::lround(scaled));
    out[2 * i] = static_cast<uint8_t>(static_cast<uint16_t>(v) & 0xff);
    out[2 * i + 1] = static_cast<uint8_t>(static_cast<uint16_t>(v) >> 8);
  }
  return out;
}

namespace detail {

inline std::vector<uint8_t> read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  return data;
}

inline uint32_t le32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

inline uint16_t le16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace detail

/// Headerless little-endian 16-bit PCM at a caller-supplied rate.
inline AudioBuffer load_raw(const std::string& path, int rate) {
  if (rate <= 0) throw Error("sample rate must be positive");
  std::vector<uint8_t> data = detail::read_binary_file(path);
  if (data.empty()) throw IoError("empty raw file: " + path);
  if (data.size() % 2 != 0)
    throw IoError("raw file has odd byte count (" +
                  std::to_string(data.size()) + "): " + path);
  AudioBuffer buf;
  buf.sample_rate = rate;
  buf.samples = decode_pcm16le(data.data(), data.size());
  return buf;
}

/// RIFF/WAVE, PCM 16-bit mono only. Stereo is rejected rather than
/// downmixed. Fails if the declared rate differs from expected_rate.
inline AudioBuffer load_wav(const std::string& path, int expected_rate) {
  std::vector<uint8_t> data = detail::read_binary_file(path);
  if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0)
    throw IoError("not a RIFF/WAVE file: " + path);

  bool have_fmt = false;
  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t pos = 12;
  const uint8_t* pcm = nullptr;
  size_t pcm_bytes = 0;
  while (pos + 8 <= data.size()) {
    char id[5] = {0};
    std::memcpy(id, data.data() + pos, 4);
    uint32_t size = detail::le32(data.data() + pos + 4);
    pos += 8;
    if (pos + size > data.size())
      throw IoError("truncated chunk '" + std::string(id) + "': " + path);
    if (std::strcmp(id, "fmt ") == 0) {
      if (size < 16) throw IoError("fmt chunk too small: " + path);
      format_tag = detail::le16(data.data() + pos);
      channels = detail::le16(data.data() + pos + 2);
      rate = detail::le32(data.data() + pos + 4);
      bits = detail::le16(data.data() + pos + 14);
      have_fmt = true;
    } else if (std::strcmp(id, "data") == 0) {
      pcm = data.data() + pos;
      pcm_bytes = size;
    }
    pos += size + (size & 1);  // chunks are word-aligned
  }
  if (!have_fmt || pcm == nullptr)
    throw IoError("missing fmt or data chunk: " + path);
  if (format_tag != 1)
    throw IoError("unsupported WAV format tag " + std::to_string(format_tag) +
                  " (only PCM): " + path);
  if (bits != 16)
    throw IoError("unsupported bit depth " + std::to_string(bits) +
                  " (only 16-bit): " + path);
  if (channels != 1)
    throw IoError("unsupported channel count " + std::to_string(channels) +
                  " (mono only): " + path);
  if (expected_rate > 0 && static_cast<int>(rate) != expected_rate)
    throw IoError("sample rate mismatch: file declares " +
                  std::to_string(rate) + " Hz, expected " +
                  std::to_string(expected_rate) + " Hz: " + path);
  if (pcm_bytes % 2 != 0) throw IoError("odd data chunk size: " + path);

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(rate);
  buf.samples = decode_pcm16le(pcm, pcm_bytes);
  return buf;
}

inline void save_wav(const std::string& path, const AudioBuffer& buf) {
  std::vector<uint8_t> pcm = encode_pcm16le(buf.samples);
  uint32_t data_size = static_cast<uint32_t>(pcm.size());
  uint32_t riff_size = 36 + data_size;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  auto w32 = [&](uint32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    out.write(reinterpret_cast<char*>(b), 4);
  };
  auto w16 = [&](uint16_t v) {
    uint8_t b[2] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8)};
    out.write(reinterpret_cast<char*>(b), 2);
  };
  out.write("RIFF", 4);
  w32(riff_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  w32(16);
  w16(1);  // PCM
  w16(1);  // mono
  w32(static_cast<uint32_t>(buf.sample_rate));
  w32(static_cast<uint32_t>(buf.sample_rate) * 2);  // byte rate
  w16(2);                                           // block align
  w16(16);                                          // bits
  out.write("data", 4);
  w32(data_size);
  out.write(reinterpret_cast<const char*>(pcm.data()),
            static_cast<std::streamsize>(pcm.size()));
  if (!out) throw IoError("short write: " + path);
}

inline void save_raw(const std::string& path, const AudioBuffer& buf) {
  std::vector<uint8_t> pcm = encode_pcm16le(buf.samples);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(pcm.data()),
            static_cast<std::streamsize>(pcm.size()));
  if (!out) throw IoError("short write: " + path);
}

/// Frame-energy silence splitter. A frame is silent when its power is
/// more than `silence_db` below the loudest frame of the recording; a
/// silent run of at least `min_silence` seconds separates utterances.
struct SplitOptions {
  double silence_db = -35.0;
  double min_silence = 0.3;
  double min_utterance = 0.2;
  double frame_length = 0.025;
  double frame_shift = 0.010;
};

inline std::vector<Utterance> split_utterances(const AudioBuffer& audio,
                                               const SplitOptions& opt = {}) {
  if (audio.samples.empty()) throw Error("split_utterances: empty audio");
  if (opt.min_silence <= 0) throw Error("split_utterances: min_silence must be > 0");
  const int flen = std::max(1, static_cast<int>(opt.frame_length * audio.sample_rate));
  const int fshift = std::max(1, static_cast<int>(opt.frame_shift * audio.sample_rate));
  const int n = static_cast<int>(audio.samples.size());

  const int num_frames = (n <= flen) ? 1 : (n - flen) / fshift + 1;
  std::vector<double> energy(num_frames);  // mean power per frame
  for (int f = 0; f < num_frames; ++f) {
    int start = f * fshift;
    int end = std::min(start + flen, n);
    double e = 0.0;
    for (int i = start; i < end; ++i) e += audio.samples[i] * audio.samples[i];
    energy[f] = e / std::max(1, end - start);
  }
  double peak = *std::max_element(energy.begin(), energy.end());
  if (peak <= 0.0) return {};  // digital silence everywhere

  std::vector<bool> voiced(energy.size());
  for (size_t t = 0; t < energy.size(); ++t) {
    double db = 10.0 * std::log10(std::max(energy[t], 1e-300) / peak);
    voiced[t] = db >= opt.silence_db;
  }

  const int gap_frames =
      std::max(1, static_cast<int>(std::ceil(opt.min_silence / opt.frame_shift)));
  std::vector<Utterance> out;
  int t = 0;
  const int T = static_cast<int>(voiced.size());
  while (t < T) {
    if (!voiced[t]) {
      ++t;
      continue;
    }
    int first = t, last = t;
    int silent_run = 0;
    while (t < T) {
      if (voiced[t]) {
        last = t;
        silent_run = 0;
      } else if (++silent_run >= gap_frames) {
        break;
      }
      ++t;
    }
    // refine to sample resolution inside the edge frames: a frame counts
    // as voiced even when only a sliver of speech overlaps it
    const double amp_threshold =
        std::sqrt(peak) * std::pow(10.0, opt.silence_db / 20.0);
    int s_begin = first * fshift;
    int s_end = std::min(last * fshift + flen, n);
    while (s_begin < s_end && std::abs(audio.samples[s_begin]) < amp_threshold)
      ++s_begin;
    while (s_end > s_begin && std::abs(audio.samples[s_end - 1]) < amp_threshold)
      --s_end;
    if (s_begin >= s_end) {  // energy was spread too thin; keep the frames
      s_begin = first * fshift;
      s_end = std::min(last * fshift + flen, n);
    }
    double start_time = static_cast<double>(s_begin) / audio.sample_rate;
    double end_time = static_cast<double>(s_end) / audio.sample_rate;
    if (end_time - start_time >= opt.min_utterance) {
      Utterance u;
      u.start_time = start_time;
      u.end_time = end_time;
      u.buffer.sample_rate = audio.sample_rate;
      u.buffer.samples.assign(audio.samples.begin() + s_begin,
                              audio.samples.begin() + s_end);
      out.push_back(std::move(u));
    }
    // skip the silent gap we just consumed
    while (t < T && !voiced[t]) ++t;
  }
  return out;
}

}  // namespace voxkit

#endif  // VOXKIT_AUDIO_HPP_
