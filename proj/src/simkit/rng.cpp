// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/rng.hpp"

namespace wxkit::sim {

Rng::Rng(std::uint64_t seed, Stream stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  engine_.seed(seq);
}

double Rng::normal(double mean, double sd)
{
  if (sd <= 0.0) return mean;
  return std::normal_distribution<double>(mean, sd)(engine_);
}

int Rng::uniform_int(int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

} // namespace wxkit::sim
