// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/pipeline.hpp"

#include "wxkit/rfdecode/a5n1.hpp"
#include "wxkit/rfdecode/framer.hpp"
#include "wxkit/rfdecode/lcw.hpp"

namespace wxkit::rf {

WeatherRecord decode_frame_bits(const BitString& bits, Protocol protocol)
{
  return protocol == Protocol::a5n1 ? decode_a5n1(bits).second : decode_lcw(bits).second;
}

std::vector<FrameOutcome> decode_capture(const PulseTrain& train, const TimingSpec& spec,
                                         Protocol protocol)
{
  std::vector<FrameOutcome> out;
  for (auto& bits : frame_pulses(train, spec, protocol)) {
    FrameOutcome o{std::move(bits), std::nullopt, std::nullopt};
    try {
      o.record = decode_frame_bits(o.bits, protocol);
    } catch (const DecodeError& e) {
      o.error = e;
    }
    out.push_back(std::move(o));
  }
  return out;
}

} // namespace wxkit::rf
