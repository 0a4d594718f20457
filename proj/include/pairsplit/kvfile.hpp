#pragma once
#include <string>
#include <vector>
#include <optional>

namespace pairsplit {

// Minimal ordered "key = value" file. '#' starts a comment, blank lines are
// skipped. Keys keep file order so serialize(parse(x)) round-trips.
struct KvFile {
  std::vector<std::pair<std::string, std::string>> entries;

  static KvFile parse_file(const std::string& path);
  static KvFile parse_text(const std::string& text, const std::string& origin = "<string>");
  std::string serialize() const;
  void save(const std::string& path) const;

  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or_throw(const std::string& key, const std::string& origin = "kv") const;
  double get_double(const std::string& key, const std::string& origin = "kv") const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_long_or(const std::string& key, long fallback) const;
  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
};

// %.17g formatting, enough digits that parse(format(x)) == x for doubles
std::string format_double(double v);

}  // namespace pairsplit
