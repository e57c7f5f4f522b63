//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "slim/errors.hpp"

namespace slim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

KvMap parse_kv_text(const std::string& text) {
  KvMap kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

KvMap load_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv_text(buf.str());
}

double kv_double(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing config key: " + key);
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': not a number: '" + it->second + "'");
  }
  return v;
}

double kv_double(const KvMap& kv, const std::string& key, double fallback) {
  return kv.count(key) ? kv_double(kv, key) : fallback;
}

std::int64_t kv_int(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing config key: " + key);
  char* end = nullptr;
  const long long v = std::strtoll(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': not an integer: '" + it->second + "'");
  }
  return v;
}

std::int64_t kv_int(const KvMap& kv, const std::string& key, std::int64_t fallback) {
  return kv.count(key) ? kv_int(kv, key) : fallback;
}

std::uint64_t kv_u64(const KvMap& kv, const std::string& key, std::uint64_t fallback) {
  if (!kv.count(key)) return fallback;
  const std::int64_t v = kv_int(kv, key);
  if (v < 0) throw ConfigError("config key '" + key + "': must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::string kv_string(const KvMap& kv, const std::string& key, const std::string& fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

}  // namespace slim
