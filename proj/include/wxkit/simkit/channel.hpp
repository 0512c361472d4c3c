// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/simkit/config.hpp"
#include "wxkit/simkit/rng.hpp"

namespace wxkit::sim {

struct ChannelResult {
  std::optional<rf::BitString> bits; ///< empty when the frame was lost
  unsigned flipped = 0;
};

/// Loses the whole frame with `frame_loss`, otherwise flips each bit
/// independently with `bit_flip`.
ChannelResult channel_apply(const rf::BitString& bits, const ChannelSpec& spec, Rng& rng);

std::optional<std::vector<std::uint8_t>> channel_apply(std::span<const std::uint8_t> bytes,
                                                       const ChannelSpec& spec, Rng& rng);

} // namespace wxkit::sim
