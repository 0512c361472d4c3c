// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wxkit/lorawan/crypto.hpp"

namespace wxkit::lorawan {

// LoRaWAN 1.0.x, ABP, unconfirmed data up, no FOpts:
//   MHDR(1) DevAddr(4 LE) FCtrl(1) FCnt(2 LE) [FPort(1) FRMPayload(N)] MIC(4)

constexpr std::uint8_t mhdr_unconfirmed_up = 0x40;
constexpr std::size_t frame_overhead = 13; // with FPort
constexpr std::size_t max_app_payload = 222;

struct AbpSession {
  std::uint32_t dev_addr = 0;
  Key128 nwk_skey{};
  Key128 app_skey{};
  /// Counter for the next uplink.  64 bits wide so exhaustion is observable.
  std::uint64_t fcnt_up = 0;
  std::uint8_t fport = 1;

  void validate() const;
};

enum class FrameErrc : std::uint8_t {
  payload_too_long,
  counter_exhausted,
  too_short,
  unsupported_mhdr,
  unsupported_fctrl,
  unknown_device,
  mic_mismatch,
  counter_window,
  bad_fport,
};

class FrameError : public std::runtime_error {
public:
  FrameError(FrameErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  FrameErrc code() const noexcept { return code_; }

private:
  FrameErrc code_;
};

/// Encrypts `payload` under the session's application key, appends the MIC,
/// and advances `session.fcnt_up`.  An empty payload omits FPort.
std::vector<std::uint8_t> frame_build(AbpSession& session, std::span<const std::uint8_t> payload);

struct ParsedUplink {
  std::uint32_t dev_addr = 0;
  std::uint32_t fcnt = 0;
  std::optional<std::uint8_t> fport;
  std::vector<std::uint8_t> payload;
};

/// Server-side counter expectation.  The received 16 low bits are widened
/// to the 32-bit counter nearest `expected_fcnt` and must fall within
/// ±`window`; with `strict_increase` the counter must also be at least
/// `expected_fcnt`.
struct FcntPolicy {
  std::uint32_t expected_fcnt = 0;
  std::uint32_t window = 16;
  bool strict_increase = true;
};

/// Verifies the MIC before decrypting.
ParsedUplink frame_parse(std::span<const std::uint8_t> frame, const AbpSession& session,
                         const FcntPolicy& policy);

/// frame_parse with a policy built from `session.fcnt_up`.
ParsedUplink frame_parse(std::span<const std::uint8_t> frame, const AbpSession& session);

/// Network-server view of one ABP device: tracks the accepted counter.
class UplinkReceiver {
public:
  explicit UplinkReceiver(AbpSession session, std::uint32_t window = 16);

  ParsedUplink accept(std::span<const std::uint8_t> frame);
  std::uint32_t expected_fcnt() const noexcept { return expected_; }

private:
  AbpSession session_;
  std::uint32_t expected_ = 0;
  std::uint32_t window_;
};

/// The XOR keystream transform; applying it twice is the identity.
std::vector<std::uint8_t> crypt_frm_payload(const Key128& key, std::uint32_t dev_addr,
                                            std::uint32_t fcnt, std::span<const std::uint8_t> in);

} // namespace wxkit::lorawan
