// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/cli/config_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

namespace {

[[noreturn]] void fail(int line, const std::string &msg) {
  throw ValidationError("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

// Strip a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string &s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_string = !in_string;
    if (s[i] == '#' && !in_string) return s.substr(0, i);
  }
  return s;
}

ConfigValue parse_scalar(const std::string &tok, int line) {
  ConfigValue v;
  v.line = line;
  if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
    v.kind = ConfigValue::Kind::String;
    v.text = tok.substr(1, tok.size() - 2);
    return v;
  }
  if (tok == "true" || tok == "false") {
    v.kind = ConfigValue::Kind::Boolean;
    v.boolean = tok == "true";
    return v;
  }
  // integer?
  {
    std::size_t pos = 0;
    bool ok = !tok.empty();
    if (ok && (tok[0] == '+' || tok[0] == '-')) pos = 1;
    if (pos >= tok.size()) ok = false;
    for (std::size_t i = pos; ok && i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) ok = false;
    if (ok) {
      v.kind = ConfigValue::Kind::Integer;
      v.integer = std::stoll(tok);
      return v;
    }
  }
  try {
    std::size_t used = 0;
    const double d = std::stod(tok, &used);
    if (used == tok.size()) {
      v.kind = ConfigValue::Kind::Real;
      v.real = d;
      return v;
    }
  } catch (...) {
  }
  fail(line, "cannot parse value '" + tok + "'");
}

ConfigValue parse_value(const std::string &raw, int line) {
  const std::string tok = trim(raw);
  if (tok.empty()) fail(line, "missing value");
  if (tok.front() == '[') {
    if (tok.back() != ']') fail(line, "unterminated array");
    ConfigValue v;
    v.kind = ConfigValue::Kind::Array;
    v.line = line;
    const std::string inner = tok.substr(1, tok.size() - 2);
    std::string item;
    bool in_string = false;
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        if (!trim(item).empty()) v.items.push_back(parse_scalar(trim(item), line));
        item.clear();
      } else {
        item += c;
      }
    }
    if (!trim(item).empty()) v.items.push_back(parse_scalar(trim(item), line));
    return v;
  }
  return parse_scalar(tok, line);
}

} // namespace

long long ConfigValue::as_integer() const {
  if (kind != Kind::Integer) fail(line, "expected an integer");
  return integer;
}

double ConfigValue::as_real() const {
  if (kind == Kind::Integer) return static_cast<double>(integer);
  if (kind != Kind::Real) fail(line, "expected a number");
  return real;
}

bool ConfigValue::as_boolean() const {
  if (kind != Kind::Boolean) fail(line, "expected true or false");
  return boolean;
}

const std::string &ConfigValue::as_string() const {
  if (kind != Kind::String) fail(line, "expected a quoted string");
  return text;
}

std::vector<long long> ConfigValue::as_integer_array() const {
  if (kind != Kind::Array) fail(line, "expected an array");
  std::vector<long long> out;
  for (const ConfigValue &v : items) out.push_back(v.as_integer());
  return out;
}

std::vector<double> ConfigValue::as_real_array() const {
  if (kind != Kind::Array) fail(line, "expected an array");
  std::vector<double> out;
  for (const ConfigValue &v : items) out.push_back(v.as_real());
  return out;
}

ConfigTable ConfigTable::parse_text(const std::string &text) {
  ConfigTable table;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) fail(line, "empty section name");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) fail(line, "empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (table.values_.count(full)) fail(line, "duplicate key '" + full + "'");
    table.values_.emplace(full, parse_value(s.substr(eq + 1), line));
  }
  return table;
}

ConfigTable ConfigTable::parse_file(const std::string &path) {
  std::ifstream is(path);
  if (!is.good()) throw ValidationError("cannot open config file: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_text(ss.str());
}

const ConfigValue &ConfigTable::get(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end())
    throw ValidationError("missing config key '" + key + "'");
  return it->second;
}

long long ConfigTable::get_integer(const std::string &key,
                                   long long fallback) const {
  return has(key) ? get(key).as_integer() : fallback;
}
double ConfigTable::get_real(const std::string &key, double fallback) const {
  return has(key) ? get(key).as_real() : fallback;
}
bool ConfigTable::get_boolean(const std::string &key, bool fallback) const {
  return has(key) ? get(key).as_boolean() : fallback;
}
std::string ConfigTable::get_string(const std::string &key,
                                    const std::string &fallback) const {
  return has(key) ? get(key).as_string() : fallback;
}

std::vector<std::string> ConfigTable::keys() const {
  std::vector<std::string> out;
  for (const auto &[k, v] : values_) out.push_back(k);
  return out;
}

} // namespace mpfeec
