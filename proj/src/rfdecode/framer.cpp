// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/framer.hpp"

#include <cmath>
#include <optional>

namespace wxkit::rf {

namespace {

bool within(double d, double nominal, double tol)
{
  return std::abs(d - nominal) <= tol * nominal;
}

struct BitClass {
  bool bit;
  double low_nominal;
};

class A5n1Framer {
public:
  A5n1Framer(std::span<const Pulse> p, const TimingSpec& spec) : p_(p), spec_(spec), t_(spec.a5n1) {}

  std::vector<BitString> run()
  {
    std::vector<BitString> out;
    std::size_t i = 0;
    while (i < p_.size()) {
      if (p_[i].level != Level::high) {
        ++i;
        continue;
      }
      std::size_t j = i;
      unsigned pairs = 0;
      double sum = 0.0;
      while (j + 1 < p_.size() && within(p_[j].duration_us, t_.sync_us, spec_.tolerance) &&
             within(p_[j + 1].duration_us, t_.sync_us, spec_.tolerance)) {
        sum += p_[j].duration_us + p_[j + 1].duration_us;
        ++pairs;
        j += 2;
      }
      if (pairs < t_.sync_pairs) {
        i = (pairs == 0) ? i + 1 : j;
        continue;
      }
      const double scale = sum / (2.0 * pairs * t_.sync_us);
      BitString bits;
      j = read_bits(j, scale, bits);
      if (bits.size() >= spec_.min_run_bits) out.push_back(std::move(bits));
      i = j;
    }
    return out;
  }

private:
  std::optional<BitClass> classify_high(double h, double scale) const
  {
    const double one = t_.bit1_high_us * scale;
    const double zero = t_.bit0_high_us * scale;
    const bool is_one = within(h, one, spec_.tolerance);
    const bool is_zero = within(h, zero, spec_.tolerance);
    if (!is_one && !is_zero) return std::nullopt;
    const bool bit = is_one && (!is_zero || std::abs(h - one) <= std::abs(h - zero));
    return BitClass{bit, (bit ? t_.bit1_low_us : t_.bit0_low_us) * scale};
  }

  // Returns the index after the last consumed entry.
  std::size_t read_bits(std::size_t j, double scale, BitString& bits) const
  {
    while (j < p_.size() && p_[j].level == Level::high) {
      const auto cls = classify_high(p_[j].duration_us, scale);
      if (!cls) return j;
      if (j + 1 >= p_.size()) {
        bits.push_back(cls->bit);
        return j + 1;
      }
      const double l = p_[j + 1].duration_us;
      if (within(l, cls->low_nominal, spec_.tolerance)) {
        bits.push_back(cls->bit);
        j += 2;
        continue;
      }
      if (l > cls->low_nominal * (1.0 + spec_.tolerance)) {
        bits.push_back(cls->bit); // trailer ends the frame
        return j + 2;
      }
      return j;
    }
    return j;
  }

  std::span<const Pulse> p_;
  const TimingSpec& spec_;
  const A5n1Timing& t_;
};

class LcwFramer {
public:
  LcwFramer(std::span<const Pulse> p, const TimingSpec& spec) : p_(p), spec_(spec), t_(spec.lcw) {}

  std::vector<BitString> run()
  {
    std::vector<BitString> out;
    std::size_t i = 0;
    while (i < p_.size()) {
      if (p_[i].level != Level::high) {
        ++i;
        continue;
      }
      BitString bits;
      const std::size_t j = read_run(i, bits);
      if (bits.size() >= spec_.min_run_bits) out.push_back(std::move(bits));
      i = (j > i) ? j : i + 1;
    }
    return out;
  }

private:
  // Bit class from the ratio of a high to the local gap duration.
  std::optional<bool> classify_ratio(double r) const
  {
    const double zero = static_cast<double>(t_.bit0_high_us) / t_.gap_us;
    const double one = static_cast<double>(t_.bit1_high_us) / t_.gap_us;
    const bool is_zero = within(r, zero, spec_.tolerance);
    const bool is_one = within(r, one, spec_.tolerance);
    if (!is_zero && !is_one) return std::nullopt;
    return is_one && (!is_zero || std::abs(r - one) <= std::abs(r - zero));
  }

  std::size_t read_run(std::size_t j, BitString& bits) const
  {
    double gap_sum = 0.0;
    unsigned gaps = 0;
    while (j < p_.size() && p_[j].level == Level::high) {
      const double h = p_[j].duration_us;
      const bool has_low = j + 1 < p_.size();
      const double l = has_low ? p_[j + 1].duration_us : 0.0;
      if (has_low && within(l, t_.gap_us, spec_.tolerance)) {
        const auto bit = classify_ratio(h / l);
        if (!bit) return j;
        bits.push_back(*bit);
        gap_sum += l;
        ++gaps;
        j += 2;
        continue;
      }
      // Last bit: judge against the gap measured so far.
      if (gaps == 0) return j;
      const double gap = gap_sum / gaps;
      if (has_low && l < gap * (1.0 + spec_.tolerance)) return j;
      const auto bit = classify_ratio(h / gap);
      if (!bit) return j;
      bits.push_back(*bit);
      return has_low ? j + 2 : j + 1;
    }
    return j;
  }

  std::span<const Pulse> p_;
  const TimingSpec& spec_;
  const LcwTiming& t_;
};

} // namespace

std::vector<BitString> frame_pulses(const PulseTrain& train, const TimingSpec& spec,
                                    Protocol protocol)
{
  spec.validate();
  switch (protocol) {
  case Protocol::a5n1: return A5n1Framer(train.entries(), spec).run();
  case Protocol::lcw: return LcwFramer(train.entries(), spec).run();
  }
  return {};
}

PulseTrain modulate(const BitString& bits, const TimingSpec& spec, Protocol protocol)
{
  spec.validate();
  PulseTrain out;
  if (protocol == Protocol::a5n1) {
    const auto& t = spec.a5n1;
    for (unsigned k = 0; k < t.sync_pairs; ++k) {
      out.append(Level::high, t.sync_us);
      out.append(Level::low, t.sync_us);
    }
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const bool last = k + 1 == bits.size();
      const auto low = bits[k] ? t.bit1_low_us : t.bit0_low_us;
      out.append(Level::high, bits[k] ? t.bit1_high_us : t.bit0_high_us);
      out.append(Level::low, last ? std::max(spec.trailer_us, low * 2) : low);
    }
  } else {
    const auto& t = spec.lcw;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const bool last = k + 1 == bits.size();
      out.append(Level::high, bits[k] ? t.bit1_high_us : t.bit0_high_us);
      out.append(Level::low, last ? std::max(spec.trailer_us, t.gap_us * 2) : t.gap_us);
    }
  }
  return out;
}

} // namespace wxkit::rf
