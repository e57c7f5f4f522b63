//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/device.hpp"

#include <algorithm>
#include <sstream>

#include "slim/config.hpp"
#include "slim/errors.hpp"

namespace slim {

SlimLevel level_from_int(int v) {
  if (v < 0 || v > 3) throw SlimError("level out of range: " + std::to_string(v));
  return static_cast<SlimLevel>(v);
}

std::string_view label(SlimLevel s) {
  switch (s) {
    case SlimLevel::S11: return "11";
    case SlimLevel::S10: return "10";
    case SlimLevel::S01: return "01";
    case SlimLevel::S00: return "00";
  }
  return "??";
}

std::optional<SlimLevel> parse_level(std::string_view text) {
  if (text == "11") return SlimLevel::S11;
  if (text == "10") return SlimLevel::S10;
  if (text == "01") return SlimLevel::S01;
  if (text == "00") return SlimLevel::S00;
  return std::nullopt;
}

std::string_view name(PulseKind k) {
  switch (k) {
    case PulseKind::P1: return "P1";
    case PulseKind::P2: return "P2";
    case PulseKind::P3: return "P3";
  }
  return "??";
}

std::optional<PulseKind> parse_pulse(std::string_view text) {
  if (text == "P1" || text == "p1") return PulseKind::P1;
  if (text == "P2" || text == "p2") return PulseKind::P2;
  if (text == "P3" || text == "p3") return PulseKind::P3;
  return std::nullopt;
}

SlimLevel apply_pulse(SlimLevel s, PulseKind kind) {
  const int l = level(s);
  switch (kind) {
    case PulseKind::P1: return SlimLevel::S11;
    case PulseKind::P2: return static_cast<SlimLevel>(std::min(l + 1, 3));
    case PulseKind::P3: return static_cast<SlimLevel>(std::max(l - 1, 0));
  }
  return s;
}

void AnalogConfig::validate() const {
  const auto& c = band_center_s;
  const auto& t = threshold_s;
  const bool interleaved = c[0] < t[0] && t[0] < c[1] && c[1] < t[1] && t[1] < c[2] &&
                           c[2] < t[2] && t[2] < c[3];
  if (!interleaved) {
    throw ConfigError("analog config: thresholds must strictly interleave band centers");
  }
  for (double s : sigma_s) {
    if (s < 0.0) throw ConfigError("analog config: sigma must be non-negative");
  }
}

AnalogConfig AnalogConfig::defaults() {
  AnalogConfig cfg;
  // 400 nS between adjacent centers; worst-case observed sigma is 28 nS, so
  // every threshold sits more than 7 sigma away from both neighbors.
  cfg.band_center_s = {100e-9, 500e-9, 900e-9, 1300e-9};
  cfg.threshold_s = {300e-9, 700e-9, 1100e-9};
  cfg.sigma_s = {28e-9, 28e-9, 28e-9, 28e-9};
  cfg.seed = 1;
  return cfg;
}

double conductance_of(SlimLevel s, const AnalogConfig& cfg) {
  cfg.validate();
  return cfg.band_center_s[static_cast<std::size_t>(level(s))];
}

double conductance_of(SlimLevel s, const AnalogConfig& cfg, std::mt19937_64& rng) {
  cfg.validate();
  const auto idx = static_cast<std::size_t>(level(s));
  const double sigma = cfg.sigma_s[idx];
  if (sigma == 0.0) return cfg.band_center_s[idx];
  std::normal_distribution<double> noise(0.0, sigma);
  return cfg.band_center_s[idx] + noise(rng);
}

SlimLevel decode_conductance(double g, const AnalogConfig& cfg) {
  const auto& t = cfg.threshold_s;
  if (g >= t[2]) return SlimLevel::S11;
  if (g >= t[1]) return SlimLevel::S10;
  if (g >= t[0]) return SlimLevel::S01;
  return SlimLevel::S00;
}

AnalogConfig analog_config_from_file(const std::string& path) {
  return analog_config_from_kv(load_kv_file(path));
}

AnalogConfig analog_config_from_kv(const KvMap& kv) {
  const AnalogConfig def = AnalogConfig::defaults();
  AnalogConfig cfg;
  for (int i = 0; i < 4; ++i) {
    cfg.band_center_s[static_cast<std::size_t>(i)] =
        kv_double(kv, "band_center_" + std::to_string(i), def.band_center_s[static_cast<std::size_t>(i)]);
    cfg.sigma_s[static_cast<std::size_t>(i)] =
        kv_double(kv, "sigma_" + std::to_string(i), def.sigma_s[static_cast<std::size_t>(i)]);
  }
  for (int i = 1; i <= 3; ++i) {
    cfg.threshold_s[static_cast<std::size_t>(i - 1)] =
        kv_double(kv, "threshold_" + std::to_string(i), def.threshold_s[static_cast<std::size_t>(i - 1)]);
  }
  cfg.seed = kv_u64(kv, "seed", def.seed);
  cfg.validate();
  return cfg;
}

std::string to_config_text(const AnalogConfig& cfg) {
  std::ostringstream out;
  out.precision(12);
  out << "# analog conductance bands (siemens)\n";
  for (int i = 0; i < 4; ++i) {
    out << "band_center_" << i << " = " << cfg.band_center_s[static_cast<std::size_t>(i)] << "\n";
  }
  for (int i = 1; i <= 3; ++i) {
    out << "threshold_" << i << " = " << cfg.threshold_s[static_cast<std::size_t>(i - 1)] << "\n";
  }
  for (int i = 0; i < 4; ++i) {
    out << "sigma_" << i << " = " << cfg.sigma_s[static_cast<std::size_t>(i)] << "\n";
  }
  out << "seed = " << cfg.seed << "\n";
  return out.str();
}

}  // namespace slim
