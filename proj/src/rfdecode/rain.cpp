// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/rain.hpp"

#include <cmath>
#include <stdexcept>

#include "wxkit/rfdecode/a5n1.hpp"
#include "wxkit/rfdecode/lcw.hpp"

namespace wxkit::rf {

double rain_counter_delta(unsigned prev, unsigned curr)
{
  constexpr unsigned mod = a5n1::rain_counter_modulus;
  if (prev >= mod || curr >= mod) throw std::invalid_argument("rain counter exceeds 14 bits");
  const unsigned tips = (curr + mod - prev) % mod;
  return tips * a5n1::rain_mm_per_tip;
}

WeatherRecord DecodeSession::accumulate(WeatherRecord r)
{
  if (!r.has(Field::rain)) return r;

  const bool a5 = r.station.protocol() == Protocol::a5n1;
  const double step = a5 ? a5n1::rain_mm_per_tip : lcw::rain_mm_per_count;
  const unsigned mod = a5 ? a5n1::rain_counter_modulus : lcw::max_value + 1;
  const auto count = static_cast<unsigned>(std::lround(r.rain_mm / step));

  const Key key{r.station.protocol(), r.station.id(), r.station.channel()};
  auto [it, fresh] = rain_.try_emplace(key, RainState{count, r.rain_mm});
  if (!fresh) {
    const unsigned tips = (count + mod - it->second.last_count) % mod;
    it->second.total_mm += tips * step;
    it->second.last_count = count;
  }
  r.rain_mm = it->second.total_mm;
  return r;
}

} // namespace wxkit::rf
