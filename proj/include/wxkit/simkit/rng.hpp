// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <random>

namespace wxkit::sim {

/// Independent named streams so that changing one subsystem's draws does not
/// shift another's.
enum class Stream : std::uint32_t { channel = 1, weather, barometer, gateway, phase };

class Rng {
public:
  Rng(std::uint64_t seed, Stream stream);

  double uniform() { return unit_(engine_); }
  bool bernoulli(double p) { return p > 0.0 && uniform() < p; }
  double normal(double mean, double sd);
  /// Inclusive bounds.
  int uniform_int(int lo, int hi);

private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

} // namespace wxkit::sim
