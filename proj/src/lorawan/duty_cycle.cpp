// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/lorawan/duty_cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace wxkit::lorawan {

double duty_cycle_wait(double t_air, double duty_limit)
{
  if (!(duty_limit > 0.0 && duty_limit <= 1.0))
    throw std::invalid_argument("duty limit must lie in (0, 1]");
  if (!(t_air > 0.0)) throw std::invalid_argument("airtime must be positive");
  return t_air * (1.0 / duty_limit - 1.0);
}

GovernorDecision governor_check(double last_tx_end, double t_air, double now, double duty_limit)
{
  const double next = last_tx_end + duty_cycle_wait(t_air, duty_limit);
  return {now >= next, next};
}

DutyCycleGovernor::DutyCycleGovernor(double duty_limit, double window_s)
    : limit_(duty_limit), window_(window_s)
{
  if (!(duty_limit > 0.0 && duty_limit <= 1.0))
    throw std::invalid_argument("duty limit must lie in (0, 1]");
  if (!(window_s > 0.0)) throw std::invalid_argument("window must be positive");
}

GovernorDecision DutyCycleGovernor::check(double now, double t_air) const
{
  const double budget = limit_ * window_ + 1e-9;
  if (!(t_air > 0.0 && t_air <= budget))
    throw std::invalid_argument("airtime must be positive and fit the window budget");

  double next = now;
  if (!recent_.empty()) {
    const auto& last = recent_.back();
    next = std::max(next, governor_check(last.start_s + last.airtime_s, last.airtime_s, now,
                                         limit_)
                              .next_allowed_s);
  }
  // The tightest window for a frame starting at s is the one ending with it.
  auto fits = [&](double s) {
    const double from = s + t_air - window_;
    double used = t_air;
    for (const auto& tx : recent_)
      used += std::max(0.0, tx.start_s + tx.airtime_s - std::max(tx.start_s, from));
    return used <= budget;
  };
  if (!fits(next)) {
    for (const auto& tx : recent_) {
      const double s = tx.start_s + tx.airtime_s + window_ - t_air;
      if (s > next && fits(s)) {
        next = s;
        break;
      }
    }
  }
  return {now >= next, next};
}

void DutyCycleGovernor::record(double start, double t_air)
{
  if (!check(start, t_air).allowed) throw std::logic_error("transmission violates the duty cycle");
  while (!recent_.empty() && recent_.front().start_s + recent_.front().airtime_s <= start - window_)
    recent_.pop_front();
  recent_.push_back({start, t_air});
}

double max_window_airtime(std::span<const Transmission> txs, double window_s)
{
  std::vector<Transmission> v(txs.begin(), txs.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.start_s < b.start_s; });
  // The worst window can be taken to start at some transmission start;
  // a transmission straddling the window end counts only its inside part.
  double worst = 0.0;
  std::size_t j = 0;
  double full = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double end = v[i].start_s + window_s;
    if (j < i) {
      j = i;
      full = 0.0;
    }
    while (j < v.size() && v[j].start_s + v[j].airtime_s <= end) full += v[j++].airtime_s;
    double partial = 0.0;
    if (j < v.size() && v[j].start_s < end) partial = end - v[j].start_s;
    worst = std::max(worst, full + partial);
    if (j > i) full -= v[i].airtime_s;
  }
  return worst;
}

} // namespace wxkit::lorawan
