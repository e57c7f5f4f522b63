//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "slim/config.hpp"

namespace slim {

/// Four-level state ladder of the bilayer OxRAM element. A level encodes the
/// (memory, logic) pair jointly: the memory plane is LRS for the two upper
/// levels, and the logic plane alternates along the ladder. Conductance is
/// strictly increasing with level.
///
/// Level 3 = '11' (LRS, logic 1)   absolute memory '1'
/// Level 2 = '10' (LRS, logic 0)
/// Level 1 = '01' (HRS, logic 1)   absolute memory '0'
/// Level 0 = '00' (HRS, logic 0)
enum class SlimLevel : std::uint8_t {
  S00 = 0,
  S01 = 1,
  S10 = 2,
  S11 = 3,
};

constexpr int level(SlimLevel s) { return static_cast<int>(s); }

constexpr int memory_bit(SlimLevel s) { return level(s) >= 2 ? 1 : 0; }
constexpr int logic_bit(SlimLevel s) { return level(s) & 1; }

/// Absolute memory states ('11' and '01') are the legal starting points for a
/// logic operation; the two even levels are post-logic states.
constexpr bool is_absolute(SlimLevel s) { return (level(s) & 1) != 0; }

SlimLevel level_from_int(int v);
std::string_view label(SlimLevel s);  // "11", "10", "01", "00"
std::optional<SlimLevel> parse_level(std::string_view text);

/// Programming stimuli. State transitions depend on the kind alone; amplitude
/// and width ride along as signal metadata.
enum class PulseKind : std::uint8_t {
  P1,  // strong SET, jumps to the top of the ladder
  P2,  // weak SET, one rung up (used for refresh)
  P3,  // RESET, one rung down
};

std::string_view name(PulseKind k);
std::optional<PulseKind> parse_pulse(std::string_view text);

inline constexpr double kPulseWidthS = 7e-3;  // all programming pulses

struct Pulse {
  PulseKind kind = PulseKind::P2;
  double amplitude_v = 0.0;
  double width_s = kPulseWidthS;

  // Nominal signal metadata; transitions never depend on these values.
  static Pulse p1() { return {PulseKind::P1, 3.0, kPulseWidthS}; }
  static Pulse p2() { return {PulseKind::P2, 2.0, kPulseWidthS}; }
  static Pulse p3() { return {PulseKind::P3, -3.0, kPulseWidthS}; }
};

/// P1 is absorbing at the top; P2 and P3 move one rung and saturate at the
/// ladder ends.
SlimLevel apply_pulse(SlimLevel s, PulseKind kind);
inline SlimLevel apply_pulse(SlimLevel s, const Pulse& p) { return apply_pulse(s, p.kind); }

struct ReadValue {
  int memory_bit = 0;
  int logic_bit = 0;
  friend bool operator==(const ReadValue&, const ReadValue&) = default;
};

/// One read yields both planes.
constexpr ReadValue decode(SlimLevel s) { return {memory_bit(s), logic_bit(s)}; }

/// Analog conductance layer: one band center per level, three thresholds
/// partitioning the conductance axis, optional per-level Gaussian noise.
struct AnalogConfig {
  std::array<double, 4> band_center_s{};  // siemens, indexed by level
  std::array<double, 3> threshold_s{};    // t1 < t2 < t3
  std::array<double, 4> sigma_s{};        // per-level noise std-dev
  std::uint64_t seed = 1;

  // Requires c0 < t1 < c1 < t2 < c2 < t3 < c3 and sigma >= 0.
  void validate() const;

  // Bands separated by well over 6 sigma at the defaults' worst-case noise.
  static AnalogConfig defaults();
};

/// Band center of the level; deterministic.
double conductance_of(SlimLevel s, const AnalogConfig& cfg);

/// Stochastic read sample: band center plus Gaussian noise of the level's
/// sigma, drawn from the caller's generator.
double conductance_of(SlimLevel s, const AnalogConfig& cfg, std::mt19937_64& rng);

/// Threshold comparator: the level whose band contains g. On a threshold the
/// upper band wins.
SlimLevel decode_conductance(double g, const AnalogConfig& cfg);

AnalogConfig analog_config_from_file(const std::string& path);
AnalogConfig analog_config_from_kv(const KvMap& kv);
std::string to_config_text(const AnalogConfig& cfg);

}  // namespace slim
