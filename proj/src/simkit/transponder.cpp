// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/transponder.hpp"

#include <algorithm>
#include <cmath>

#include "wxkit/energy/model.hpp"
#include "wxkit/rfdecode/pipeline.hpp"

namespace wxkit::sim {

std::string_view to_string(Phase p)
{
  switch (p) {
  case Phase::reset: return "reset";
  case Phase::init: return "init";
  case Phase::rx1: return "rx1";
  case Phase::inter_sleep: return "inter_sleep";
  case Phase::rx2: return "rx2";
  case Phase::read_baro: return "read_baro";
  case Phase::build_tx: return "build_tx";
  case Phase::transmit: return "transmit";
  case Phase::deep_sleep: return "deep_sleep";
  }
  return "?";
}

double StatePowers::of(Phase p) const noexcept
{
  switch (p) {
  case Phase::reset: return 0.0;
  case Phase::deep_sleep: return sleep_uw;
  case Phase::transmit: return active_uw + tx_extra_uw;
  default: return active_uw;
  }
}

StatePowers attribute_power(const energy::EnergyProfile& profile, double airtime_s)
{
  StatePowers s;
  s.sleep_uw = profile.sleep_power_uw();
  if (profile.detail) {
    auto p = profile;
    p.detail->t_shr_s = 0.0;
    p.detail->t_tx_s = airtime_s;
    s.active_uw = energy::fit_component_power(p, p.e_active_uwh);
    s.tx_extra_uw = p.detail->i_tx_ma * p.supply_v * 1000.0;
  } else {
    s.active_uw = profile.e_active_uwh * 3600.0 / profile.t_active_s;
  }
  return s;
}

TransponderParams TransponderParams::from_config(const SimConfig& c)
{
  const auto& t = c.transponder;
  const auto profile = energy::profile_by_name(t.profile);
  TransponderParams p;
  p.station = StationId(c.station.protocol, c.station.id, c.station.channel);
  p.init = to_us(t.init_s);
  p.inter_sleep = to_us(t.inter_sleep_s);
  p.rx_timeout = to_us(t.rx_timeout_s);
  p.baro = to_us(t.baro_s);
  p.build = to_us(t.build_s);
  p.cycle = to_us(t.t_cycle_s);
  p.min_active = to_us(t.min_active_s.value_or(profile.t_active_s));
  const auto phy_len = static_cast<unsigned>(lorawan::payload_size(c.station.protocol) +
                                             lorawan::frame_overhead);
  const double air = lorawan::airtime(t.radio, phy_len);
  p.airtime = to_us(air);
  p.duty_limit = t.duty_limit;
  p.powers = attribute_power(profile, air);
  p.battery_mv = t.battery_mv.value_or(static_cast<std::int32_t>(std::lround(profile.supply_v * 1000)));
  p.session.dev_addr = t.dev_addr;
  p.session.nwk_skey = t.nwk_skey;
  p.session.app_skey = t.app_skey;
  p.session.fport = static_cast<std::uint8_t>(t.fport);
  return p;
}

TransponderState::TransponderState(const TransponderParams& p)
    : session(p.session), governor(p.duty_limit)
{
  memory.station = p.station;
}

namespace {

class Transition {
public:
  Transition(const TransponderParams& p, const TransponderState& s, SimTime now)
      : p_(p), r_{s, {}}, now_(now)
  {}

  TransponderState& st() { return r_.state; }
  void emit(Action a) { r_.actions.push_back(std::move(a)); }

  void enter(Phase to, std::optional<SimTime> until, bool wants_baro = false)
  {
    auto& s = st();
    if (now_ > s.entered) emit(LedgerEntry{s.phase, s.entered, now_, p_.powers.of(s.phase)});
    emit(PhaseChange{s.phase, to});
    s.phase = to;
    s.entered = now_;
    s.timer_token = 0;
    if (until) {
      s.timer_token = s.next_token++;
      emit(ScheduleTimer{std::max(*until, now_), s.timer_token, wants_baro});
    }
  }

  void begin_cycle()
  {
    auto& s = st();
    s.cycle_start = now_;
    s.memory = WeatherRecord{};
    s.memory.station = p_.station;
    s.frames_received = 0;
    enter(Phase::rx1, now_ + p_.rx_timeout);
  }

  void schedule_build()
  {
    auto& s = st();
    SimTime exit = std::max(now_ + p_.build, s.cycle_start + p_.min_active - p_.airtime);
    const auto d = s.governor.check(to_s(exit), to_s(p_.airtime));
    if (!d.allowed) exit = std::max(exit, static_cast<SimTime>(std::ceil(d.next_allowed_s * 1e6)) + 1);
    enter(Phase::build_tx, exit);
  }

  void transmit()
  {
    auto& s = st();
    s.memory.seq = s.seq++;
    s.memory.battery_mv = p_.battery_mv;
    const lorawan::PayloadMeta meta{static_cast<std::uint8_t>(std::min(s.frames_received, 255u)),
                                    static_cast<std::uint16_t>(std::lround(to_s(p_.cycle)))};
    const auto payload = lorawan::payload_encode(s.memory, meta);
    const auto fcnt = static_cast<std::uint32_t>(s.session.fcnt_up);
    auto frame = lorawan::frame_build(s.session, payload);
    s.governor.record(to_s(now_), to_s(p_.airtime));
    emit(UplinkSent{std::move(frame), fcnt, p_.airtime, s.memory, meta});
    enter(Phase::transmit, now_ + p_.airtime);
  }

  void frames(const rf::PulseTrain& train)
  {
    auto& s = st();
    for (auto& o : rf::decode_capture(train, p_.timing, p_.station.protocol())) {
      if (o.error) {
        emit(FrameRejected{o.error->what()});
        continue;
      }
      if (!(o.record->station == p_.station)) {
        emit(FrameRejected{"frame from another station"});
        continue;
      }
      auto rec = s.rain.accumulate(*o.record);
      s.memory = merge_partial(s.memory, rec);
      ++s.frames_received;
      emit(FrameAccepted{std::move(rec)});
    }
  }

  StepResult done() { return std::move(r_); }

private:
  const TransponderParams& p_;
  StepResult r_;
  SimTime now_;
};

[[noreturn]] void violation(Phase p, std::string_view what)
{
  throw ProtocolViolation(std::string(what) + " in phase " + std::string(to_string(p)));
}

} // namespace

StepResult step(const TransponderParams& params, const TransponderState& state, SimTime now,
                const Input& input)
{
  if (now < state.entered) throw ProtocolViolation("input earlier than the current phase");
  Transition tr(params, state, now);
  auto& s = tr.st();

  if (std::holds_alternative<PowerOn>(input)) {
    if (s.phase != Phase::reset) violation(s.phase, "power-on");
    tr.enter(Phase::init, now + params.init);
    return tr.done();
  }

  if (const auto* t = std::get_if<TimerFired>(&input)) {
    if (s.timer_token == 0 || t->token != s.timer_token) violation(s.phase, "stale timer");
    switch (s.phase) {
    case Phase::init:
    case Phase::deep_sleep: tr.begin_cycle(); break;
    case Phase::rx1: tr.enter(Phase::inter_sleep, now + params.inter_sleep); break;
    case Phase::inter_sleep: tr.enter(Phase::rx2, now + params.rx_timeout); break;
    case Phase::rx2: tr.enter(Phase::read_baro, now + params.baro, true); break;
    case Phase::build_tx: tr.transmit(); break;
    case Phase::transmit:
      tr.enter(Phase::deep_sleep, std::max(now, s.cycle_start + params.cycle));
      break;
    default: violation(s.phase, "timer");
    }
    return tr.done();
  }

  if (const auto* f = std::get_if<FrameArrival>(&input)) {
    if (s.phase != Phase::rx1 && s.phase != Phase::rx2) violation(s.phase, "frame arrival");
    const unsigned before = s.frames_received;
    tr.frames(f->train);
    if (s.phase == Phase::rx1 && s.frames_received > before)
      tr.enter(Phase::inter_sleep, now + params.inter_sleep);
    else if (s.phase == Phase::rx2 && is_complete(s.memory))
      tr.enter(Phase::read_baro, now + params.baro, true);
    return tr.done();
  }

  const auto& b = std::get<BaroReading>(input);
  if (s.phase != Phase::read_baro) violation(s.phase, "barometer reading");
  if (s.timer_token == 0 || b.token != s.timer_token) violation(s.phase, "stale barometer reading");
  s.memory.pressure_pa = std::llround(b.pressure_pa);
  s.memory.valid.set(Field::pressure);
  if (params.station.protocol() == Protocol::a5n1) s.memory.board_temp_c = b.temp_c;
  tr.schedule_build();
  return tr.done();
}

} // namespace wxkit::sim
