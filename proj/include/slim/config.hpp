//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace slim {

// Flat key=value configuration. Lines starting with '#' and blank lines are
// ignored; whitespace around keys and values is trimmed.
using KvMap = std::map<std::string, std::string>;

KvMap parse_kv_text(const std::string& text);
KvMap load_kv_file(const std::string& path);

// Typed getters. The no-fallback forms throw ConfigError naming the key.
double kv_double(const KvMap& kv, const std::string& key);
double kv_double(const KvMap& kv, const std::string& key, double fallback);
std::int64_t kv_int(const KvMap& kv, const std::string& key);
std::int64_t kv_int(const KvMap& kv, const std::string& key, std::int64_t fallback);
std::uint64_t kv_u64(const KvMap& kv, const std::string& key, std::uint64_t fallback);
std::string kv_string(const KvMap& kv, const std::string& key, const std::string& fallback);

}  // namespace slim
