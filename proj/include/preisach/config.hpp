#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace preisach {

// Flat experiment configuration: one `dotted.key = value` per line, `#`
// starts a comment. Typed getters throw ConfigError naming the key.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  void set(const std::string& key, std::string value) { entries_[key] = std::move(value); }
  // "key=value" as given to --set.
  void apply_override(std::string_view assignment);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::string> get_strings(const std::string& key, std::vector<std::string> fallback) const;

  // Throws on the first key not in `known`.
  void reject_unknown(std::span<const std::string_view> known) const;

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace preisach
