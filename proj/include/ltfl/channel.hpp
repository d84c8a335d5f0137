// SPDX-License-Identifier: Apache-2.0
//
// Uplink channel model: rate, packet error probability, and per-round
// transmission success for a single device.
//
// The gain expectation has two modes. Deterministic treats the fading
// coefficient as a constant and collapses the expectation to a single
// evaluation. RayleighMeanScaled multiplies the coefficient by a unit-mean
// exponential draw and averages over mc_samples Monte-Carlo gains. The MC
// sample set is fixed by mc_seed, so rate and error probability are pure
// functions of (params, power) in both modes; candidate-power searches see
// a consistent objective.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ltfl/rng.hpp"

namespace ltfl {

enum class FadingMode { Deterministic, RayleighMeanScaled };

struct ChannelParams {
  double bandwidth_ul = 10e6;    // Hz, per-device uplink allocation
  double noise_psd = 3.9810717055349695e-21;  // W/Hz (linear; -174 dBm/Hz)
  double waterfall_threshold = 1.0053078245191325;  // linear (0.023 dB)
  double interference = 1.5e-8;  // W
  double fading_coeff = 0.015;   // dimensionless
  double distance = 200.0;       // m
  FadingMode fading_mode = FadingMode::Deterministic;
  int mc_samples = 10000;        // ignored in Deterministic mode
  std::uint64_t mc_seed = 0;     // fixes the Monte-Carlo gain sample set

  void validate() const {
    if (!(bandwidth_ul > 0)) throw std::invalid_argument("channel: bandwidth_ul must be > 0");
    if (!(noise_psd > 0)) throw std::invalid_argument("channel: noise_psd must be > 0");
    if (!(waterfall_threshold > 0)) throw std::invalid_argument("channel: waterfall_threshold must be > 0");
    if (!(interference >= 0)) throw std::invalid_argument("channel: interference must be >= 0");
    if (!(fading_coeff > 0)) throw std::invalid_argument("channel: fading_coeff must be > 0");
    if (!(distance > 0)) throw std::invalid_argument("channel: distance must be > 0");
    if (mc_samples < 1) throw std::invalid_argument("channel: mc_samples must be >= 1");
  }
};

// alpha = 1 when the packet passed CRC and entered aggregation.
struct TransmissionOutcome {
  int alpha = 0;
  double rate = 0.0;  // bit/s
  double per = 0.0;   // packet error probability in [0, 1]
};

namespace detail {

// Unit-mean exponential fading multipliers, fixed per channel instance.
inline std::vector<double> fading_multipliers(const ChannelParams& p) {
  RngStream rng(derive_seed(p.mc_seed, 0x66616465ULL));
  std::vector<double> m(static_cast<std::size_t>(p.mc_samples));
  for (auto& v : m) v = rng.exponential();
  return m;
}

}  // namespace detail

// Mean path gain: fading coefficient over squared distance.
inline double mean_channel_gain(const ChannelParams& p) {
  return p.fading_coeff / (p.distance * p.distance);
}

// One gain realization. Deterministic mode returns the mean gain and leaves
// the stream untouched; RayleighMeanScaled scales it by an Exp(1) draw.
inline double channel_gain(const ChannelParams& p, RngStream& rng) {
  const double h = mean_channel_gain(p);
  if (p.fading_mode == FadingMode::Deterministic) return h;
  return h * rng.exponential();
}

inline double channel_gain(const ChannelParams& p) {
  if (p.fading_mode != FadingMode::Deterministic)
    throw std::logic_error("channel_gain: sampled mode needs a random stream");
  return mean_channel_gain(p);
}

// Achievable uplink rate in bit/s at the given transmit power.
inline double uplink_rate(const ChannelParams& p, double power) {
  if (!(power > 0)) throw std::invalid_argument("uplink_rate: power must be > 0");
  const double denom = p.interference + p.bandwidth_ul * p.noise_psd;
  const double h = mean_channel_gain(p);
  if (p.fading_mode == FadingMode::Deterministic) {
    return p.bandwidth_ul * std::log2(1.0 + power * h / denom);
  }
  const auto mult = detail::fading_multipliers(p);
  double acc = 0.0;
  for (double m : mult) acc += std::log2(1.0 + power * h * m / denom);
  return p.bandwidth_ul * acc / static_cast<double>(mult.size());
}

// Probability that the device's packet fails CRC at the given power.
inline double packet_error_rate(const ChannelParams& p, double power) {
  if (!(power > 0)) throw std::invalid_argument("packet_error_rate: power must be > 0");
  const double num = p.waterfall_threshold * (p.interference + p.bandwidth_ul * p.noise_psd);
  const double h = mean_channel_gain(p);
  if (p.fading_mode == FadingMode::Deterministic) {
    return 1.0 - std::exp(-num / (power * h));
  }
  const auto mult = detail::fading_multipliers(p);
  double acc = 0.0;
  for (double m : mult) acc += 1.0 - std::exp(-num / (power * h * m));
  return acc / static_cast<double>(mult.size());
}

// Bernoulli success draw plus the rate/error metadata for cost accounting.
inline TransmissionOutcome draw_transmission(const ChannelParams& p, double power,
                                             RngStream& rng) {
  TransmissionOutcome out;
  out.per = packet_error_rate(p, power);
  out.rate = uplink_rate(p, power);
  out.alpha = rng.uniform() >= out.per ? 1 : 0;
  return out;
}

}  // namespace ltfl
