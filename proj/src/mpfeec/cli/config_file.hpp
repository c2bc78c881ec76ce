// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CLI_CONFIG_FILE_HPP
#define MPFEEC_CLI_CONFIG_FILE_HPP

#include <map>
#include <string>
#include <vector>

namespace mpfeec {

/// One parsed config value. Arrays hold scalars of one kind.
struct ConfigValue {
  enum class Kind { Integer, Real, Boolean, String, Array };
  Kind kind = Kind::Integer;
  long long integer = 0;
  double real = 0.0;
  bool boolean = false;
  std::string text;
  std::vector<ConfigValue> items;
  int line = 0;

  long long as_integer() const;
  double as_real() const; // integers promote
  bool as_boolean() const;
  const std::string &as_string() const;
  std::vector<long long> as_integer_array() const;
  std::vector<double> as_real_array() const;
};

/// Flat key/value tree parsed from a TOML-style file: `[section]` headers,
/// `key = value` lines, `#` comments. Keys are reported as
/// "section.key". Parse errors carry line numbers.
class ConfigTable {
public:
  static ConfigTable parse_text(const std::string &text);
  static ConfigTable parse_file(const std::string &path);

  bool has(const std::string &key) const { return values_.count(key) != 0; }
  const ConfigValue &get(const std::string &key) const;

  long long get_integer(const std::string &key, long long fallback) const;
  double get_real(const std::string &key, double fallback) const;
  bool get_boolean(const std::string &key, bool fallback) const;
  std::string get_string(const std::string &key,
                         const std::string &fallback) const;

  std::vector<std::string> keys() const;

private:
  std::map<std::string, ConfigValue> values_;
};

} // namespace mpfeec

#endif
