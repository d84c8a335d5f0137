// SPDX-License-Identifier: Apache-2.0
//
// Seeded random streams with explicit substream derivation.
//
// Every stochastic component draws from a stream derived from
// (master_seed, tag, index, round), so changing the device count or the
// number of rounds never reshuffles unrelated draws. Distributions are
// implemented here instead of <random>'s, whose outputs differ across
// standard libraries; simulation output must be reproducible byte for byte.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ltfl {

// splitmix64 finalizer, used only for seed mixing.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines a master seed with up to three coordinates into a child seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ mix64(a ^ 0x100000001b3ULL));
  s = mix64(s ^ mix64(b ^ 0xcbf29ce484222325ULL));
  s = mix64(s ^ mix64(c ^ 0x27d4eb2f165667c5ULL));
  return s;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Child stream whose future draws are independent of this stream's.
  RngStream fork() { return RngStream(mix64(eng_())); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds, rejection-sampled so every value is equally likely.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
    if (span == 0) return static_cast<std::int64_t>(eng_());  // full 64-bit range
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % span + 1ULL) % span;
    std::uint64_t r = eng_();
    if (rem != 0) {
      const std::uint64_t bound = 0ULL - rem;
      while (r >= bound) r = eng_();
    }
    return lo + static_cast<std::int64_t>(r % span);
  }

  // Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Exponential with mean 1.
  double exponential() { return -std::log(1.0 - uniform()); }

  // Gamma(shape, 1) via Marsaglia-Tsang, boosted for shape < 1.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Symmetric Dirichlet over k categories.
  std::vector<double> dirichlet(double alpha, std::size_t k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (auto& v : w) {
      v = gamma(alpha);
      sum += v;
    }
    if (sum <= 0.0) {
      // All gamma draws underflowed; degenerate to a single category.
      std::fill(w.begin(), w.end(), 0.0);
      w[static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(k) - 1))] = 1.0;
      return w;
    }
    for (auto& v : w) v /= sum;
    return w;
  }

  // Fisher-Yates with this stream's uniform_int.
  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      const auto j = uniform_int(0, static_cast<std::int64_t>(i));
      std::swap(first[i], first[j]);
    }
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  std::mt19937_64 eng_;
};

}  // namespace ltfl
