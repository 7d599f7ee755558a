// Copyright 2026 The qrsmux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qrs {

/// Flat `key = value` settings. Blank lines and lines starting with `#` are
/// ignored; later keys override earlier ones.
class Config {
 public:
  Config() = default;

  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  std::optional<std::int64_t> get_int(std::string_view key) const;
  std::string get_or(std::string_view key, std::string fallback) const;

  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace qrs
