// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/simulator.hpp"

#include <cmath>
#include <optional>
#include <queue>
#include <variant>

#include "wxkit/core/record_json.hpp"
#include "wxkit/energy/model.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/lorawan/payload.hpp"
#include "wxkit/rfdecode/formats.hpp"
#include "wxkit/rfdecode/framer.hpp"
#include "wxkit/simkit/channel.hpp"
#include "wxkit/simkit/emitter.hpp"
#include "wxkit/simkit/transponder.hpp"

namespace wxkit::sim {

namespace {

using json = nlohmann::ordered_json;

struct StationTick {};
struct QueuedTimer {
  std::uint64_t token;
  bool wants_baro;
};
struct Boot {};

struct Queued {
  SimTime at;
  std::uint64_t order;
  std::variant<StationTick, QueuedTimer, Boot> what;

  bool operator>(const Queued& o) const { return at != o.at ? at > o.at : order > o.order; }
};

bool within(double a, double b, std::optional<double> bound)
{
  return bound && std::abs(a - b) <= *bound + 1e-6;
}

/// Checks a decoded uplink against what the station actually measured.
bool matches_truth(const WeatherRecord& got, const WeatherRecord& want)
{
  if (!(got.station == want.station) || got.seq != want.seq) return false;
  if (got.valid != want.valid) return false;
  const auto b = quantize_roundtrip_bounds(want);
  if (want.has(Field::temperature) && !within(got.temperature_c, want.temperature_c, b.temperature_c))
    return false;
  if (want.has(Field::humidity) && !within(got.humidity_pct, want.humidity_pct, b.humidity_pct))
    return false;
  if (want.has(Field::wind_speed) &&
      !within(got.wind_speed_kph, want.wind_speed_kph, b.wind_speed_kph))
    return false;
  if (want.has(Field::wind_dir) && !within(got.wind_dir_deg, want.wind_dir_deg, b.wind_dir_deg))
    return false;
  if (want.has(Field::rain) && !within(got.rain_mm, want.rain_mm, b.rain_mm)) return false;
  if (want.has(Field::pressure) && got.pressure_pa != want.pressure_pa) return false;
  if (want.board_temp_c.has_value() != got.board_temp_c.has_value()) return false;
  if (want.board_temp_c && !within(*got.board_temp_c, *want.board_temp_c, b.board_temp_c))
    return false;
  return got.battery_mv == want.battery_mv;
}

class Simulation {
public:
  explicit Simulation(const SimConfig& c)
      : cfg_(c),
        params_(TransponderParams::from_config(c)),
        fsm_(params_),
        emitter_(c.station, c.seed),
        channel_rng_(c.seed, Stream::channel),
        baro_rng_(c.seed, Stream::barometer),
        gateway_rng_(c.seed, Stream::gateway),
        receiver_(params_.session),
        end_(to_us(c.duration_s))
  {
    cycle_truth_.station = params_.station;
    sum_.duration_s = c.duration_s;
  }

  SimTrace run()
  {
    push(0, Boot{});
    push(emitter_.next_time(), StationTick{});
    SimTime last = 0;
    while (!queue_.empty() && queue_.top().at <= end_) {
      const Queued q = queue_.top();
      queue_.pop();
      if (q.at < last) sum_.invariants.time_monotone = false;
      last = q.at;
      now_ = q.at;
      if (std::holds_alternative<Boot>(q.what)) {
        deliver(PowerOn{});
      } else if (std::holds_alternative<StationTick>(q.what)) {
        station_tick();
      } else {
        const auto& t = std::get<QueuedTimer>(q.what);
        if (t.token != fsm_.timer_token) continue; // superseded
        if (t.wants_baro) {
          const double p = baro_rng_.normal(cfg_.transponder.baro.pressure_pa,
                                            cfg_.transponder.baro.pressure_noise_pa);
          const double tc =
              baro_rng_.normal(cfg_.transponder.baro.temp_c, cfg_.transponder.baro.temp_noise_c);
          cycle_truth_.pressure_pa = std::llround(p);
          cycle_truth_.valid.set(Field::pressure);
          if (params_.station.protocol() == Protocol::a5n1) cycle_truth_.board_temp_c = tc;
          deliver(BaroReading{t.token, p, tc});
        } else {
          deliver(TimerFired{t.token});
        }
      }
    }
    now_ = end_;
    if (now_ > fsm_.entered) ledger(LedgerEntry{fsm_.phase, fsm_.entered, now_, params_.powers.of(fsm_.phase)});
    finish();
    return std::move(trace_);
  }

private:
  template <typename T>
  void push(SimTime at, T what)
  {
    queue_.push(Queued{at, order_++, what});
  }

  void line(json j)
  {
    if (!cfg_.record_trace) return;
    json out;
    out["t_us"] = now_;
    for (auto& [k, v] : j.items()) out[k] = v;
    trace_.lines.push_back(out.dump());
  }

  void station_tick()
  {
    auto e = emitter_.emit();
    push(emitter_.next_time(), StationTick{});
    ++sum_.frames_emitted;
    auto ch = channel_apply(e.bits, cfg_.channel, channel_rng_);
    if (!ch.bits) ++sum_.frames_lost;
    if (ch.flipped) ++sum_.frames_corrupted;
    const bool listening = fsm_.phase == Phase::rx1 || fsm_.phase == Phase::rx2;
    line({{"event", "emission"},
          {"kind", e.kind},
          {"lost", !ch.bits},
          {"flipped", ch.flipped},
          {"heard", listening && ch.bits}});
    if (!listening || !ch.bits) return;
    ++sum_.frames_heard;
    current_truth_ = e.truth;
    deliver(FrameArrival{rf::modulate(*ch.bits, params_.timing, params_.station.protocol())});
    current_truth_.reset();
  }

  void deliver(const Input& in)
  {
    auto r = step(params_, fsm_, now_, in);
    fsm_ = std::move(r.state);
    for (auto& a : r.actions) std::visit([this](auto& x) { act(x); }, a);
  }

  void act(const ScheduleTimer& t) { push(t.at, QueuedTimer{t.token, t.wants_baro}); }

  void act(const LedgerEntry& e) { ledger(e); }

  void act(const PhaseChange& c)
  {
    if (c.to == Phase::rx1) {
      ++sum_.cycles;
      cycle_truth_ = WeatherRecord{};
      cycle_truth_.station = params_.station;
    }
    line({{"event", "phase"}, {"from", to_string(c.from)}, {"to", to_string(c.to)}});
  }

  void act(const FrameAccepted& f)
  {
    ++sum_.frames_accepted;
    if (current_truth_) cycle_truth_ = merge_partial(cycle_truth_, *current_truth_);
    line({{"event", "frame_accepted"}, {"record", to_json(f.decoded)}});
  }

  void act(const FrameRejected& f)
  {
    ++sum_.frames_rejected;
    line({{"event", "frame_rejected"}, {"reason", f.reason}});
  }

  void act(const UplinkSent& u)
  {
    ++sum_.uplinks_sent;
    txs_.push_back({to_s(now_), to_s(u.airtime)});
    sum_.airtime_s += to_s(u.airtime);
    WeatherRecord expected = cycle_truth_;
    expected.seq = u.record.seq;
    expected.battery_mv = u.record.battery_mv;

    const bool lost = gateway_rng_.bernoulli(cfg_.gateway.uplink_loss);
    json j{{"event", "uplink"},
           {"fcnt", u.fcnt},
           {"airtime_s", to_s(u.airtime)},
           {"frame", rf::to_hex(u.frame)},
           {"delivered", !lost}};
    if (lost) {
      ++sum_.uplinks_lost;
      line(std::move(j));
      return;
    }
    try {
      const auto up = receiver_.accept(u.frame);
      const auto dec = lorawan::payload_decode(up.payload);
      ++sum_.uplinks_delivered;
      if (is_complete(dec.record)) ++sum_.complete_records;
      const bool ok = matches_truth(dec.record, expected);
      ok ? ++sum_.truth_matches : ++sum_.truth_mismatches;
      j["record"] = to_json(dec.record);
      j["frames_received"] = dec.meta.frames_received;
      j["matches_truth"] = ok;
    } catch (const std::exception& ex) {
      ++sum_.uplink_errors;
      sum_.invariants.delivered_decoded = false;
      j["error"] = ex.what();
    }
    line(std::move(j));
  }

  void ledger(const LedgerEntry& e)
  {
    if (e.start != ledger_end_) sum_.invariants.ledger_contiguous = false;
    ledger_end_ = e.end;
    const double uwh = e.energy_uwh();
    sum_.energy_uwh += uwh;
    sum_.energy_by_phase_uwh[std::string(to_string(e.phase))] += uwh;
    phase_us_[e.phase] += e.end - e.start;
    line({{"event", "ledger"},
          {"phase", to_string(e.phase)},
          {"start_us", e.start},
          {"end_us", e.end},
          {"power_uw", e.power_uw},
          {"energy_uwh", uwh}});
  }

  void finish()
  {
    // Recompute the ledger from accumulated phase durations.
    double again = 0.0;
    for (const auto& [phase, us] : phase_us_) again += params_.powers.of(phase) * to_s(us) / 3600.0;
    const double tol = 1e-9 * std::max(1.0, std::abs(again));
    sum_.invariants.ledger_consistent =
        std::abs(again - sum_.energy_uwh) <= tol && ledger_end_ == end_;

    const auto profile = energy::profile_by_name(cfg_.transponder.profile);
    sum_.closed_form_uwh =
        energy::cycle_energy(profile, cfg_.transponder.t_cycle_s) * cfg_.duration_s /
        cfg_.transponder.t_cycle_s;
    sum_.duty_utilization_pct = 100.0 * sum_.airtime_s / cfg_.duration_s;
    sum_.max_hour_airtime_s = lorawan::max_window_airtime(txs_, 3600.0);
    sum_.invariants.duty_cycle =
        sum_.max_hour_airtime_s <= cfg_.transponder.duty_limit * 3600.0 + 1e-9;
    sum_.invariants.lossless_fidelity = cfg_.channel.bit_flip > 0.0 || sum_.truth_mismatches == 0;
    trace_.summary = sum_;
  }

  const SimConfig& cfg_;
  TransponderParams params_;
  TransponderState fsm_;
  StationEmitter emitter_;
  Rng channel_rng_;
  Rng baro_rng_;
  Rng gateway_rng_;
  lorawan::UplinkReceiver receiver_;
  SimTime end_;
  SimTime now_ = 0;
  SimTime ledger_end_ = 0;
  std::uint64_t order_ = 0;
  std::priority_queue<Queued, std::vector<Queued>, std::greater<>> queue_;
  std::optional<WeatherRecord> current_truth_;
  WeatherRecord cycle_truth_;
  std::map<Phase, SimTime> phase_us_;
  std::vector<lorawan::Transmission> txs_;
  SimSummary sum_;
  SimTrace trace_;
};

double round_to(double v, int decimals)
{
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

} // namespace

nlohmann::ordered_json SimSummary::to_json() const
{
  json j;
  j["duration_s"] = duration_s;
  j["cycles"] = cycles;
  j["frames"] = {{"emitted", frames_emitted},   {"lost", frames_lost},
                 {"corrupted", frames_corrupted}, {"heard", frames_heard},
                 {"accepted", frames_accepted}, {"rejected", frames_rejected}};
  j["uplinks"] = {{"sent", uplinks_sent},
                  {"lost", uplinks_lost},
                  {"delivered", uplinks_delivered},
                  {"errors", uplink_errors},
                  {"complete_records", complete_records},
                  {"truth_matches", truth_matches},
                  {"truth_mismatches", truth_mismatches}};
  json by_phase = json::object();
  for (const auto& [k, v] : energy_by_phase_uwh) by_phase[k] = round_to(v, 6);
  j["energy"] = {{"total_uwh", round_to(energy_uwh, 6)},
                 {"closed_form_uwh", round_to(closed_form_uwh, 6)},
                 {"deviation_pct",
                  closed_form_uwh > 0 ? round_to(100.0 * (energy_uwh / closed_form_uwh - 1.0), 6)
                                      : 0.0},
                 {"by_phase_uwh", by_phase}};
  j["airtime"] = {{"total_s", round_to(airtime_s, 6)},
                  {"utilization_pct", round_to(duty_utilization_pct, 9)},
                  {"max_hour_s", round_to(max_hour_airtime_s, 6)}};
  j["invariants"] = {{"time_monotone", invariants.time_monotone},
                     {"ledger_contiguous", invariants.ledger_contiguous},
                     {"ledger_consistent", invariants.ledger_consistent},
                     {"duty_cycle", invariants.duty_cycle},
                     {"delivered_decoded", invariants.delivered_decoded},
                     {"lossless_fidelity", invariants.lossless_fidelity},
                     {"all", invariants.all()}};
  return j;
}

std::string SimTrace::to_jsonl() const
{
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  out += json{{"summary", summary.to_json()}}.dump();
  out += '\n';
  return out;
}

SimTrace run(const SimConfig& config)
{
  if (auto problems = validate(config); !problems.empty()) throw ConfigError(std::move(problems));
  return Simulation(config).run();
}

} // namespace wxkit::sim
