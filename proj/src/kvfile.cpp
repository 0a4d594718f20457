#include "pairsplit/kvfile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pairsplit {

static std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

KvFile KvFile::parse_text(const std::string& text, const std::string& origin) {
  KvFile kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ":1: expected 'key = value', got '" + body + "'");
    std::string key = trim(body.substr(0, eq));
    std::string val = trim(body.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ":1: empty key");
    kv.entries.emplace_back(key, val);
  }
  return kv;
}

KvFile KvFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

std::string KvFile::serialize() const {
  std::string out;
  for (const auto& [k, v] : entries) {
    out += k;
    out += " = ";
    out += v;
    out += "\n";
  }
  return out;
}

void KvFile::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize();
}

bool KvFile::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

std::optional<std::string> KvFile::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

std::string KvFile::get_or_throw(const std::string& key, const std::string& origin) const {
  auto v = get(key);
  if (!v) throw std::invalid_argument(origin + ": missing key '" + key + "'");
  return *v;
}

static double parse_double(const std::string& key, const std::string& s, const std::string& origin) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(origin + ": key '" + key + "' is not a number: '" + s + "'");
  }
}

double KvFile::get_double(const std::string& key, const std::string& origin) const {
  return parse_double(key, get_or_throw(key, origin), origin);
}

double KvFile::get_double_or(const std::string& key, double fallback) const {
  auto v = get(key);
  return v ? parse_double(key, *v, "<kv>") : fallback;
}

long KvFile::get_long_or(const std::string& key, long fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  return static_cast<long>(parse_double(key, *v, "<kv>"));
}

void KvFile::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries)
    if (k == key) { v = value; return; }
  entries.emplace_back(key, value);
}

void KvFile::set_double(const std::string& key, double value) {
  set(key, format_double(value));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace pairsplit
