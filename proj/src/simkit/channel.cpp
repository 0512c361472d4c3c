// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/channel.hpp"

namespace wxkit::sim {

ChannelResult channel_apply(const rf::BitString& bits, const ChannelSpec& spec, Rng& rng)
{
  ChannelResult out;
  if (rng.bernoulli(spec.frame_loss)) return out;
  rf::BitString b = bits;
  if (spec.bit_flip > 0.0) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (rng.bernoulli(spec.bit_flip)) {
        b[i] = !b[i];
        ++out.flipped;
      }
    }
  }
  out.bits = std::move(b);
  return out;
}

std::optional<std::vector<std::uint8_t>> channel_apply(std::span<const std::uint8_t> bytes,
                                                       const ChannelSpec& spec, Rng& rng)
{
  auto r = channel_apply(rf::bits_from_bytes(bytes), spec, rng);
  if (!r.bits) return std::nullopt;
  return rf::bytes_from_bits(*r.bits);
}

} // namespace wxkit::sim
