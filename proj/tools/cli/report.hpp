#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mods::cli {

inline constexpr int kFormatVersion = 1;

enum class Format { table, structured };

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Output of one command: ordered scalar fields followed by tables.
//
// Structured form, one record per line:
//   format_version 1
//   <key> <value>
//   <table>[<i>].<column> <value>
// Values run to the end of the line; arrays are written "[a b c]".
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value);
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  Table& table(std::string name, std::vector<std::string> columns);

  void render(std::ostream& out, Format format) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<Table> tables_;
};

template <class Range>
std::string array(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(v);
  }
  return out + "]";
}

// Parsed structured output.
class Structured {
 public:
  // Throws Error(parse_error) on lines without a key.
  static Structured parse(std::string_view text);

  std::optional<std::string> get(std::string_view key) const;
  // Throws Error(parse_error) when the key is missing.
  std::string at(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// "[0 2 5]" -> {0, 2, 5}; throws Error(parse_error).
std::vector<std::uint64_t> parse_array(std::string_view text);

}  // namespace mods::cli
