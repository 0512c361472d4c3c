// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/formats.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace wxkit::rf {

namespace {

std::string_view strip(std::string_view s)
{
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int hex_digit(char c)
{
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

constexpr char hex_chars[] = "0123456789abcdef";

} // namespace

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{}

PulseTrain read_pulses(std::istream& in)
{
  PulseTrain train;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto s = strip(raw);
    if (s.empty()) continue;
    if (s.size() < 3 || (s[0] != 'H' && s[0] != 'L') || (s[1] != ' ' && s[1] != '\t'))
      throw FormatError(lineno, "expected 'H <us>' or 'L <us>'");
    auto num = s.substr(2);
    num.remove_prefix(std::min(num.find_first_not_of(" \t"), num.size()));
    std::uint32_t us = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), us);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw FormatError(lineno, "bad duration '" + std::string(num) + "'");
    try {
      train.append(s[0] == 'H' ? Level::high : Level::low, us);
    } catch (const std::invalid_argument& e) {
      throw FormatError(lineno, e.what());
    }
  }
  return train;
}

void write_pulses(std::ostream& out, const PulseTrain& train)
{
  for (const auto& p : train.entries())
    out << (p.level == Level::high ? 'H' : 'L') << ' ' << p.duration_us << '\n';
}

std::vector<BitString> read_bitstrings(std::istream& in)
{
  std::vector<BitString> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto s = strip(raw);
    if (s.empty()) continue;
    BitString bits;
    for (char c : s) {
      if (c != '0' && c != '1') throw FormatError(lineno, "bitstrings contain only 0 and 1");
      bits.push_back(c == '1');
    }
    out.push_back(std::move(bits));
  }
  return out;
}

std::string to_bit_text(const BitString& bits)
{
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<std::string> read_hex_lines(std::istream& in)
{
  std::vector<std::string> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto s = strip(raw);
    if (s.empty()) continue;
    for (char c : s)
      if (hex_digit(c) < 0) throw FormatError(lineno, "hex lines use lowercase 0-9a-f only");
    out.emplace_back(s);
  }
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes)
{
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(hex_chars[b >> 4]);
    s.push_back(hex_chars[b & 0xF]);
  }
  return s;
}

std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles)
{
  std::string s;
  for (auto n : nibbles) s.push_back(hex_chars[n & 0xF]);
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex)
{
  if (hex.size() % 2) throw std::invalid_argument("hex string has odd length");
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]), lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::vector<std::uint8_t> nibbles_from_hex(std::string_view hex)
{
  std::vector<std::uint8_t> out;
  out.reserve(hex.size());
  for (char c : hex) {
    const int d = hex_digit(c);
    if (d < 0) throw std::invalid_argument("invalid hex digit");
    out.push_back(static_cast<std::uint8_t>(d));
  }
  return out;
}

} // namespace wxkit::rf
