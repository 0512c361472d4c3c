// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wxkit/core/weather_record.hpp"
#include "wxkit/rfdecode/errors.hpp"
#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/rfdecode/timing.hpp"

namespace wxkit::rf {

/// Decode one frame of either family; throws DecodeError.
WeatherRecord decode_frame_bits(const BitString& bits, Protocol protocol);

struct FrameOutcome {
  BitString bits;
  std::optional<WeatherRecord> record; ///< set on success
  std::optional<DecodeError> error;    ///< set on rejection
};

/// Frame a capture and decode every run.  Rejected runs are kept with
/// their error so callers can report them.
std::vector<FrameOutcome> decode_capture(const PulseTrain& train, const TimingSpec& spec,
                                         Protocol protocol);

} // namespace wxkit::rf
