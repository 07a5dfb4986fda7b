// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sddfrc {

/// Flat sectioned key/value text:
///
///   # comment
///   [section]
///   key = 1.5            number
///   key = true           boolean
///   key = "text"         string
///   key = [1, 2, 3]      number list
///   key = ["a", "b"]     string list
///
/// Keys before the first section header belong to section "". Every lookup
/// marks the key as consumed; `reject_unconsumed` then reports the first
/// key nobody asked for, which catches typos.
class ConfigDocument {
 public:
  using Value = std::variant<double, bool, std::string, std::vector<double>, std::vector<std::string>>;

  struct Entry {
    Value value;
    int line = 0;
  };

  static ConfigDocument parse(std::string_view text);
  static ConfigDocument load(const std::filesystem::path& path);

  bool has(const std::string& section, const std::string& key) const;
  bool has_section(const std::string& section) const;
  /// Line of a key (0 when absent).
  int line(const std::string& section, const std::string& key) const;

  double number(const std::string& section, const std::string& key) const;
  long long integer(const std::string& section, const std::string& key) const;
  bool boolean(const std::string& section, const std::string& key) const;
  std::string string(const std::string& section, const std::string& key) const;
  std::vector<double> numbers(const std::string& section, const std::string& key) const;
  std::vector<std::string> strings(const std::string& section, const std::string& key) const;

  /// Throws ParseError naming the first section or key that was never looked up.
  void reject_unconsumed() const;

 private:
  const Entry& get(const std::string& section, const std::string& key) const;
  template <class T>
  const T& typed(const std::string& section, const std::string& key, const char* type_name) const;

  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::map<std::string, int> section_lines_;
  mutable std::set<std::pair<std::string, std::string>> consumed_;
  mutable std::set<std::string> sections_seen_;
};

}  // namespace sddfrc
