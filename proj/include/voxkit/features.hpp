// voxkit/features.hpp  --  39-dim MFCC+delta+delta-delta front end
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

#ifndef VOXKIT_FEATURES_HPP_
#define VOXKIT_FEATURES_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "voxkit/audio.hpp"
#include "voxkit/common.hpp"

namespace voxkit {

// The 2595 constant pins the log base to 10; a natural-log reading would
// need 1127 instead.
inline double hz_to_mel(double f) {
  if (f < 0) throw Error("hz_to_mel: negative frequency");
  return 2595.0 * std::log10(1.0 + f / 700.0);
}

inline double mel_to_hz(double m) {
  if (m < 0) throw Error("mel_to_hz: negative mel value");
  return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0);
}

struct FrameConfig {
  double frame_length = 0.025;
  double frame_shift = 0.010;
  int fft_size = 0;  // 0 = smallest power of two >= samples per frame
  double preemphasis = 0.97;
  int num_ceps = 13;       // static cepstra kept, C0 included
  double log_floor = 1e-10;  // filterbank energies are clamped here
  bool cepstral_mean_norm = true;

  int frame_samples(int rate) const {
    return std::max(1, static_cast<int>(frame_length * rate));
  }
  int shift_samples(int rate) const {
    return std::max(1, static_cast<int>(frame_shift * rate));
  }
  int effective_fft_size(int rate) const {
    if (fft_size > 0) return fft_size;
    int n = 1;
    while (n < frame_samples(rate)) n <<= 1;
    return n;
  }
};

/// Triangular filters with centers equally spaced on the mel axis.
struct MelFilterbank {
  int num_filters = 26;
  int fft_size = 512;
  int sample_rate = 16000;
  double low_freq = 0.0;
  double high_freq = 8000.0;
  std::vector<double> center_freqs;           // Hz, one per filter
  std::vector<std::vector<double>> weights;   // [filter][fft bin 0..fft_size/2]

  static MelFilterbank make(int num_filters, int fft_size, int sample_rate,
                            double low_freq = 0.0, double high_freq = 0.0) {
    if (num_filters < 1) throw Error("filterbank needs at least one filter");
    MelFilterbank fb;
    fb.num_filters = num_filters;
    fb.fft_size = fft_size;
    fb.sample_rate = sample_rate;
    fb.low_freq = low_freq;
    fb.high_freq = high_freq > 0 ? high_freq : sample_rate / 2.0;
    if (fb.high_freq <= fb.low_freq || fb.high_freq > sample_rate / 2.0 + 1e-9)
      throw Error("filterbank frequency range invalid");

    const double mel_low = hz_to_mel(fb.low_freq);
    const double mel_high = hz_to_mel(fb.high_freq);
    // num_filters centers plus the two range edges, equally spaced in mel
    std::vector<double> edges(num_filters + 2);
    for (int i = 0; i < num_filters + 2; ++i)
      edges[i] = mel_to_hz(mel_low + (mel_high - mel_low) * i / (num_filters + 1));
    fb.center_freqs.assign(edges.begin() + 1, edges.end() - 1);

    const int num_bins = fft_size / 2 + 1;
    const double bin_hz = static_cast<double>(sample_rate) / fft_size;
    fb.weights.assign(num_filters, std::vector<double>(num_bins, 0.0));
    for (int m = 0; m < num_filters; ++m) {
      double left = edges[m], center = edges[m + 1], right = edges[m + 2];
      for (int b = 0; b < num_bins; ++b) {
        double f = b * bin_hz;
        double w = 0.0;
        if (f > left && f < center)
          w = (f - left) / (center - left);
        else if (f >= center && f < right)
          w = (right - f) / (right - center);
        if (w > 0) fb.weights[m][b] = w;
      }
    }
    return fb;
  }
};

/// Time-ordered rows of feature coefficients; dim is 39 for the full
/// MFCC+deltas pipeline but arbitrary for intermediate stages.
struct FeatureMatrix {
  std::vector<std::vector<double>> rows;
  double frame_shift = 0.010;

  int num_frames() const { return static_cast<int>(rows.size()); }
  int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

namespace detail {

// In-place iterative radix-2 FFT.
inline void fft_radix2(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error("FFT size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

inline std::vector<double> hamming_window(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
  return w;
}

}  // namespace detail

/// Pre-emphasized, Hamming-windowed frames (snip-edges framing: only
/// frames that fit entirely in the signal).
inline std::vector<std::vector<double>> extract_frames(const AudioBuffer& audio,
                                                       const FrameConfig& cfg) {
  const int flen = cfg.frame_samples(audio.sample_rate);
  const int fshift = cfg.shift_samples(audio.sample_rate);
  const int n = static_cast<int>(audio.samples.size());
  if (n < flen)
    throw Error("utterance shorter than one frame (" + std::to_string(n) +
                " < " + std::to_string(flen) + " samples)");
  const int num_frames = (n - flen) / fshift + 1;

  // signal-level pre-emphasis: y[i] = x[i] - k*x[i-1]
  std::vector<double> pre(audio.samples);
  for (int i = n - 1; i > 0; --i) pre[i] -= cfg.preemphasis * pre[i - 1];
  pre[0] *= 1.0 - cfg.preemphasis;

  const std::vector<double> window = detail::hamming_window(flen);
  std::vector<std::vector<double>> frames(num_frames, std::vector<double>(flen));
  for (int f = 0; f < num_frames; ++f)
    for (int i = 0; i < flen; ++i)
      frames[f][i] = pre[f * fshift + i] * window[i];
  return frames;
}

/// Magnitude-squared spectrum, bins 0..fft_size/2.
inline std::vector<double> power_spectrum(const std::vector<double>& frame,
                                          int fft_size) {
  if (static_cast<int>(frame.size()) > fft_size)
    throw Error("fft_size smaller than frame");
  std::vector<std::complex<double>> buf(fft_size);
  for (size_t i = 0; i < frame.size(); ++i) buf[i] = frame[i];
  detail::fft_radix2(buf);
  std::vector<double> power(fft_size / 2 + 1);
  for (size_t b = 0; b < power.size(); ++b) power[b] = std::norm(buf[b]);
  return power;
}

inline std::vector<double> mel_energies(const std::vector<double>& power,
                                        const MelFilterbank& fb) {
  std::vector<double> e(fb.num_filters, 0.0);
  for (int m = 0; m < fb.num_filters; ++m) {
    const auto& w = fb.weights[m];
    double acc = 0.0;
    for (size_t b = 0; b < w.size(); ++b)
      if (w[b] != 0.0) acc += w[b] * power[b];
    e[m] = acc;
  }
  return e;
}

/// Orthonormal DCT-II of the log energies, first num_ceps coefficients.
inline std::vector<double> dct2(const std::vector<double>& x, int num_ceps) {
  const int m = static_cast<int>(x.size());
  std::vector<double> c(num_ceps, 0.0);
  for (int j = 0; j < num_ceps; ++j) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i)
      acc += x[i] * std::cos(j * (i + 0.5) * std::numbers::pi / m);
    c[j] = acc * (j == 0 ? std::sqrt(1.0 / m) : std::sqrt(2.0 / m));
  }
  return c;
}

/// Regression deltas over +/-2 frames with edge replication; applied
/// twice this yields delta-deltas. Input rows of width d become 3d.
inline FeatureMatrix append_deltas(const FeatureMatrix& feats) {
  if (feats.rows.empty()) throw Error("append_deltas: no frames");
  const int T = feats.num_frames();
  const int D = feats.dim();
  auto at = [&](const std::vector<std::vector<double>>& m, int t) -> const std::vector<double>& {
    if (t < 0) t = 0;
    if (t >= T) t = T - 1;
    return m[t];
  };
  auto regress = [&](const std::vector<std::vector<double>>& src) {
    std::vector<std::vector<double>> out(T, std::vector<double>(D));
    constexpr double denom = 2.0 * (1.0 * 1.0 + 2.0 * 2.0);
    for (int t = 0; t < T; ++t)
      for (int d = 0; d < D; ++d)
        out[t][d] = (1.0 * (at(src, t + 1)[d] - at(src, t - 1)[d]) +
                     2.0 * (at(src, t + 2)[d] - at(src, t - 2)[d])) /
                    denom;
    return out;
  };
  std::vector<std::vector<double>> delta = regress(feats.rows);
  std::vector<std::vector<double>> delta2 = regress(delta);

  FeatureMatrix out;
  out.frame_shift = feats.frame_shift;
  out.rows.assign(T, std::vector<double>());
  for (int t = 0; t < T; ++t) {
    out.rows[t].reserve(3 * D);
    out.rows[t].insert(out.rows[t].end(), feats.rows[t].begin(), feats.rows[t].end());
    out.rows[t].insert(out.rows[t].end(), delta[t].begin(), delta[t].end());
    out.rows[t].insert(out.rows[t].end(), delta2[t].begin(), delta2[t].end());
  }
  return out;
}

/// 13 static cepstra per frame, before deltas. Exposed for tests and
/// the feature dump tool.
inline FeatureMatrix compute_static_mfcc(const AudioBuffer& utterance,
                                         const FrameConfig& cfg,
                                         const MelFilterbank& fb) {
  if (fb.sample_rate != utterance.sample_rate)
    throw Error("filterbank built for a different sample rate");
  const int fft_size = cfg.effective_fft_size(utterance.sample_rate);
  if (fb.fft_size != fft_size) throw Error("filterbank built for a different FFT size");

  std::vector<std::vector<double>> frames = extract_frames(utterance, cfg);
  FeatureMatrix out;
  out.frame_shift = cfg.frame_shift;
  out.rows.reserve(frames.size());
  for (const auto& frame : frames) {
    std::vector<double> power = power_spectrum(frame, fft_size);
    std::vector<double> energies = mel_energies(power, fb);
    for (double& e : energies) e = std::log(std::max(e, cfg.log_floor));
    out.rows.push_back(dct2(energies, cfg.num_ceps));
  }
  if (cfg.cepstral_mean_norm) {
    std::vector<double> mean(cfg.num_ceps, 0.0);
    for (const auto& row : out.rows)
      for (int d = 0; d < cfg.num_ceps; ++d) mean[d] += row[d];
    for (double& m : mean) m /= static_cast<double>(out.rows.size());
    for (auto& row : out.rows)
      for (int d = 0; d < cfg.num_ceps; ++d) row[d] -= mean[d];
  }
  return out;
}

/// Full front end: pre-emphasis, Hamming window, |FFT|^2, mel filterbank,
/// floored natural log, DCT-II keeping 13 coefficients, optional cepstral
/// mean normalization, then deltas and delta-deltas for 39 dims total.
inline FeatureMatrix compute_mfcc(const AudioBuffer& utterance,
                                  const FrameConfig& cfg,
                                  const MelFilterbank& fb) {
  return append_deltas(compute_static_mfcc(utterance, cfg, fb));
}

inline FeatureMatrix compute_mfcc(const AudioBuffer& utterance,
                                  const FrameConfig& cfg = {}) {
  MelFilterbank fb = MelFilterbank::make(26, cfg.effective_fft_size(utterance.sample_rate),
                                         utterance.sample_rate);
  return compute_mfcc(utterance, cfg, fb);
}

// ---- feature dump format: "dims frame_shift" header then one row per line

inline void write_features(const FeatureMatrix& feats, std::ostream& os) {
  os << feats.dim() << ' ' << format_g9(feats.frame_shift) << '\n';
  for (const auto& row : feats.rows) {
    for (size_t d = 0; d < row.size(); ++d) {
      if (d) os << ' ';
      os << format_g9(row[d]);
    }
    os << '\n';
  }
}

inline std::string write_features(const FeatureMatrix& feats) {
  std::ostringstream ss;
  write_features(feats, ss);
  return ss.str();
}

inline FeatureMatrix read_features(std::istream& is) {
  FeatureMatrix out;
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty feature dump", 1);
  std::vector<std::string> head = split_fields(line);
  if (head.size() != 2) throw ParseError("feature header needs 'dims frame_shift'", 1);
  double dims_d = 0;
  if (!parse_double(head[0], &dims_d) || !parse_double(head[1], &out.frame_shift))
    throw ParseError("bad feature header", 1);
  const int dims = static_cast<int>(dims_d);
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> f = split_fields(line);
    if (static_cast<int>(f.size()) != dims)
      throw ParseError("expected " + std::to_string(dims) + " values", lineno);
    std::vector<double> row(dims);
    for (int d = 0; d < dims; ++d)
      if (!parse_double(f[d], &row[d]))
        throw ParseError("bad value '" + f[d] + "'", lineno);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace voxkit

#endif  // VOXKIT_FEATURES_HPP_
