// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace wxkit::lorawan {

using Key128 = std::array<std::uint8_t, 16>;
using Block = std::array<std::uint8_t, 16>;

/// AES-128 single-block encryption (ECB, no padding).
Block aes128_encrypt(const Key128& key, const Block& in);

/// AES-CMAC (RFC 4493) over `data`.
Block aes128_cmac(const Key128& key, std::span<const std::uint8_t> data);

} // namespace wxkit::lorawan
