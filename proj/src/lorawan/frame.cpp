// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/lorawan/frame.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wxkit::lorawan {

namespace {

constexpr std::uint8_t dir_uplink = 0x00;
constexpr std::uint64_t fcnt_limit = std::uint64_t{1} << 32;

void put_le32(std::uint8_t* p, std::uint32_t v)
{
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint32_t get_le32(const std::uint8_t* p)
{
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

// A_i and B0 share the same layout apart from the leading tag and last byte.
Block iv_block(std::uint8_t tag, std::uint32_t dev_addr, std::uint32_t fcnt, std::uint8_t last)
{
  Block b{};
  b[0] = tag;
  b[5] = dir_uplink;
  put_le32(&b[6], dev_addr);
  put_le32(&b[10], fcnt);
  b[15] = last;
  return b;
}

std::array<std::uint8_t, 4> compute_mic(const Key128& nwk_skey, std::uint32_t dev_addr,
                                        std::uint32_t fcnt, std::span<const std::uint8_t> msg)
{
  const Block b0 = iv_block(0x49, dev_addr, fcnt, static_cast<std::uint8_t>(msg.size()));
  std::vector<std::uint8_t> buf(b0.begin(), b0.end());
  buf.insert(buf.end(), msg.begin(), msg.end());
  const Block cmac = aes128_cmac(nwk_skey, buf);
  return {cmac[0], cmac[1], cmac[2], cmac[3]};
}

} // namespace

void AbpSession::validate() const
{
  if (fport < 1 || fport > 223) throw std::invalid_argument("fport must be in 1..223");
}

std::vector<std::uint8_t> crypt_frm_payload(const Key128& key, std::uint32_t dev_addr,
                                            std::uint32_t fcnt, std::span<const std::uint8_t> in)
{
  std::vector<std::uint8_t> out(in.begin(), in.end());
  for (std::size_t off = 0, i = 1; off < out.size(); off += 16, ++i) {
    const Block s = aes128_encrypt(key, iv_block(0x01, dev_addr, fcnt, static_cast<std::uint8_t>(i)));
    const std::size_t n = std::min<std::size_t>(16, out.size() - off);
    for (std::size_t k = 0; k < n; ++k) out[off + k] ^= s[k];
  }
  return out;
}

std::vector<std::uint8_t> frame_build(AbpSession& session, std::span<const std::uint8_t> payload)
{
  session.validate();
  if (payload.size() > max_app_payload)
    throw FrameError(FrameErrc::payload_too_long,
                     "payload of " + std::to_string(payload.size()) + " bytes exceeds 222");
  if (session.fcnt_up >= fcnt_limit)
    throw FrameError(FrameErrc::counter_exhausted, "uplink frame counter exhausted");

  const auto fcnt = static_cast<std::uint32_t>(session.fcnt_up);
  std::vector<std::uint8_t> f;
  f.reserve(frame_overhead + payload.size());
  f.push_back(mhdr_unconfirmed_up);
  f.resize(5);
  put_le32(&f[1], session.dev_addr);
  f.push_back(0x00); // FCtrl: no ADR, no ACK, FOptsLen 0
  f.push_back(static_cast<std::uint8_t>(fcnt & 0xFF));
  f.push_back(static_cast<std::uint8_t>((fcnt >> 8) & 0xFF));
  if (!payload.empty()) {
    f.push_back(session.fport);
    const auto enc = crypt_frm_payload(session.app_skey, session.dev_addr, fcnt, payload);
    f.insert(f.end(), enc.begin(), enc.end());
  }
  const auto mic = compute_mic(session.nwk_skey, session.dev_addr, fcnt, f);
  f.insert(f.end(), mic.begin(), mic.end());
  ++session.fcnt_up;
  return f;
}

ParsedUplink frame_parse(std::span<const std::uint8_t> frame, const AbpSession& session,
                         const FcntPolicy& policy)
{
  if (frame.size() < 12)
    throw FrameError(FrameErrc::too_short, "frame of " + std::to_string(frame.size()) +
                                               " bytes is shorter than 12");
  if (frame[0] != mhdr_unconfirmed_up)
    throw FrameError(FrameErrc::unsupported_mhdr, "unsupported MHDR " + std::to_string(frame[0]));
  if (frame[5] != 0x00)
    throw FrameError(FrameErrc::unsupported_fctrl, "FCtrl/FOpts not supported");

  ParsedUplink out;
  out.dev_addr = get_le32(&frame[1]);
  if (out.dev_addr != session.dev_addr)
    throw FrameError(FrameErrc::unknown_device, "frame is for another DevAddr");

  const std::uint32_t low = frame[6] | (frame[7] << 8);
  const std::int64_t expected = policy.expected_fcnt;
  std::int64_t cand = (expected & ~std::int64_t{0xFFFF}) | low;
  for (std::int64_t alt : {cand - 0x10000, cand + 0x10000})
    if (alt >= 0 && alt < static_cast<std::int64_t>(fcnt_limit) &&
        std::abs(alt - expected) < std::abs(cand - expected))
      cand = alt;
  const auto fcnt = static_cast<std::uint32_t>(cand);

  const auto body = frame.first(frame.size() - 4);
  const auto mic = compute_mic(session.nwk_skey, out.dev_addr, fcnt, body);
  if (!std::equal(mic.begin(), mic.end(), frame.end() - 4))
    throw FrameError(FrameErrc::mic_mismatch, "MIC mismatch");

  if (std::abs(cand - expected) > policy.window || (policy.strict_increase && cand < expected))
    throw FrameError(FrameErrc::counter_window,
                     "frame counter " + std::to_string(fcnt) + " outside window around " +
                         std::to_string(policy.expected_fcnt));

  out.fcnt = fcnt;
  if (body.size() > 8) {
    out.fport = body[8];
    if (*out.fport == 0) throw FrameError(FrameErrc::bad_fport, "FPort 0 (MAC commands) not supported");
    out.payload = crypt_frm_payload(session.app_skey, out.dev_addr, fcnt, body.subspan(9));
  }
  return out;
}

ParsedUplink frame_parse(std::span<const std::uint8_t> frame, const AbpSession& session)
{
  const auto expected = static_cast<std::uint32_t>(std::min<std::uint64_t>(session.fcnt_up, fcnt_limit - 1));
  return frame_parse(frame, session, FcntPolicy{expected, 16, true});
}

UplinkReceiver::UplinkReceiver(AbpSession session, std::uint32_t window)
    : session_(std::move(session)), expected_(static_cast<std::uint32_t>(session_.fcnt_up)),
      window_(window)
{}

ParsedUplink UplinkReceiver::accept(std::span<const std::uint8_t> frame)
{
  auto up = frame_parse(frame, session_, FcntPolicy{expected_, window_, true});
  expected_ = up.fcnt + 1;
  return up;
}

} // namespace wxkit::lorawan
