// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sddfrc/errors.hpp"

namespace sddfrc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

// Drop a trailing comment, ignoring '#' inside quotes.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

struct Scanner {
  std::string_view text;
  int line;
  std::string key;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("config line " + std::to_string(line) + " (" + key + "): " + msg, line, key);
  }

  double parse_number(std::string_view tok) const {
    tok = trim(tok);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
      fail("expected a finite number, got '" + std::string(tok) + "'");
    return v;
  }

  std::string parse_string(std::string_view tok) const {
    tok = trim(tok);
    if (tok.size() < 2 || tok.front() != '"' || tok.back() != '"') fail("malformed string " + std::string(tok));
    tok = tok.substr(1, tok.size() - 2);
    if (tok.find('"') != std::string_view::npos) fail("embedded quote in string");
    return std::string(tok);
  }

  ConfigDocument::Value parse_value(std::string_view v) const {
    v = trim(v);
    if (v.empty()) fail("missing value");
    if (v == "true") return true;
    if (v == "false") return false;
    if (v.front() == '"') return parse_string(v);
    if (v.front() == '[') {
      if (v.back() != ']') fail("unterminated list");
      std::string_view body = trim(v.substr(1, v.size() - 2));
      std::vector<std::string_view> items;
      while (!body.empty()) {
        const auto comma = body.find(',');
        items.push_back(trim(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body = trim(body.substr(comma + 1));
        if (body.empty()) fail("trailing comma in list");
      }
      if (!items.empty() && !items.front().empty() && items.front().front() == '"') {
        std::vector<std::string> out;
        for (auto it : items) out.push_back(parse_string(it));
        return out;
      }
      std::vector<double> out;
      for (auto it : items) out.push_back(parse_number(it));
      return out;
    }
    return parse_number(v);
  }
};

const char* type_name(const ConfigDocument::Value& v) {
  switch (v.index()) {
    case 0: return "number";
    case 1: return "boolean";
    case 2: return "string";
    case 3: return "number list";
    default: return "string list";
  }
}

}  // namespace

ConfigDocument ConfigDocument::parse(std::string_view text) {
  ConfigDocument doc;
  std::string section;
  doc.sections_[section];
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      const std::string_view name = trim(line.substr(1, line.size() >= 2 ? line.size() - 2 : 0));
      if (line.back() != ']' || !valid_name(name))
        throw ParseError("config line " + std::to_string(line_no) + ": malformed section header", line_no, "");
      section = std::string(name);
      if (doc.section_lines_.count(section))
        throw ParseError("config line " + std::to_string(line_no) + ": duplicate section [" + section + "]",
                         line_no, section);
      doc.section_lines_[section] = line_no;
      doc.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    const std::string key(trim(line.substr(0, eq)));
    Scanner sc{line, line_no, section.empty() ? key : section + "." + key};
    if (eq == std::string_view::npos) sc.fail("expected 'key = value'");
    if (!valid_name(key)) sc.fail("invalid key name");
    auto& entries = doc.sections_[section];
    if (entries.count(key)) sc.fail("duplicate key");
    entries[key] = Entry{sc.parse_value(line.substr(eq + 1)), line_no};
  }
  return doc;
}

ConfigDocument ConfigDocument::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open config file " + path.string(), 0, "");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse(ss.str());
}

bool ConfigDocument::has(const std::string& section, const std::string& key) const {
  sections_seen_.insert(section);
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

bool ConfigDocument::has_section(const std::string& section) const {
  sections_seen_.insert(section);
  return section_lines_.count(section) > 0;
}

int ConfigDocument::line(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return 0;
  const auto e = s->second.find(key);
  return e == s->second.end() ? 0 : e->second.line;
}

const ConfigDocument::Entry& ConfigDocument::get(const std::string& section, const std::string& key) const {
  sections_seen_.insert(section);
  const std::string full = section.empty() ? key : section + "." + key;
  const auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.count(key)) throw ParseError("config: missing key " + full, 0, full);
  consumed_.insert({section, key});
  return s->second.at(key);
}

template <class T>
const T& ConfigDocument::typed(const std::string& section, const std::string& key, const char* want) const {
  const Entry& e = get(section, key);
  if (const T* v = std::get_if<T>(&e.value)) return *v;
  const std::string full = section.empty() ? key : section + "." + key;
  throw ParseError("config line " + std::to_string(e.line) + " (" + full + "): expected " + want + ", got " +
                       type_name(e.value),
                   e.line, full);
}

double ConfigDocument::number(const std::string& section, const std::string& key) const {
  return typed<double>(section, key, "number");
}

long long ConfigDocument::integer(const std::string& section, const std::string& key) const {
  const double v = number(section, key);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) {
    const Entry& e = get(section, key);
    const std::string full = section.empty() ? key : section + "." + key;
    throw ParseError("config line " + std::to_string(e.line) + " (" + full + "): expected an integer", e.line, full);
  }
  return static_cast<long long>(v);
}

bool ConfigDocument::boolean(const std::string& section, const std::string& key) const {
  return typed<bool>(section, key, "boolean");
}

std::string ConfigDocument::string(const std::string& section, const std::string& key) const {
  return typed<std::string>(section, key, "string");
}

std::vector<double> ConfigDocument::numbers(const std::string& section, const std::string& key) const {
  const Entry& e = get(section, key);
  if (const auto* v = std::get_if<std::vector<double>>(&e.value)) return *v;
  // An empty list parses as a number list; accept it where strings are wanted too.
  return typed<std::vector<double>>(section, key, "number list");
}

std::vector<std::string> ConfigDocument::strings(const std::string& section, const std::string& key) const {
  const Entry& e = get(section, key);
  if (const auto* v = std::get_if<std::vector<double>>(&e.value); v && v->empty()) return {};
  return typed<std::vector<std::string>>(section, key, "string list");
}

void ConfigDocument::reject_unconsumed() const {
  for (const auto& [name, line] : section_lines_)
    if (!sections_seen_.count(name))
      throw ParseError("config line " + std::to_string(line) + ": unknown section [" + name + "]", line, name);
  // Report in file order.
  const Entry* first = nullptr;
  std::string first_key;
  for (const auto& [section, entries] : sections_)
    for (const auto& [key, entry] : entries)
      if (!consumed_.count({section, key}) && (!first || entry.line < first->line)) {
        first = &entry;
        first_key = section.empty() ? key : section + "." + key;
      }
  if (first)
    throw ParseError("config line " + std::to_string(first->line) + ": unknown key " + first_key, first->line,
                     first_key);
}

}  // namespace sddfrc
