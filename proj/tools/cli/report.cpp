#include "report.hpp"

#include <algorithm>
#include <charconv>

#include "mods/error.hpp"

namespace mods::cli {

void Report::add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables_.push_back(Table{std::move(name), std::move(columns), {}});
  return tables_.back();
}

void Report::render(std::ostream& out, Format format) const {
  if (format == Format::structured) {
    out << "format_version " << kFormatVersion << '\n';
    out << "command " << command_ << '\n';
    for (const auto& [k, v] : fields_) out << k << ' ' << v << '\n';
    for (const auto& t : tables_) {
      out << t.name << "_count " << t.rows.size() << '\n';
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
          out << t.name << '[' << i << "]." << t.columns[c] << ' ' << t.rows[i][c] << '\n';
        }
      }
    }
    return;
  }

  std::size_t key_width = 0;
  for (const auto& [k, v] : fields_) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : fields_) out << k << std::string(key_width - k.size(), ' ') << "  " << v << '\n';
  for (const auto& t : tables_) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      width[c] = t.columns[c].size();
      for (const auto& row : t.rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      out << s << '\n';
    };
    out << '\n' << t.name << " (" << t.rows.size() << ")\n";
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

Structured Structured::parse(std::string_view text) {
  Structured s;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == 0) fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": missing key");
    if (sp == std::string_view::npos) {
      s.entries_.emplace_back(std::string(line), std::string());
    } else {
      s.entries_.emplace_back(std::string(line.substr(0, sp)), std::string(line.substr(sp + 1)));
    }
  }
  return s;
}

std::optional<std::string> Structured::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string Structured::at(std::string_view key) const {
  auto v = get(key);
  if (!v) fail(ErrorCode::parse_error, "missing key '" + std::string(key) + "'");
  return *v;
}

std::vector<std::uint64_t> parse_array(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    fail(ErrorCode::parse_error, "not an array: '" + std::string(text) + "'");
  }
  std::vector<std::uint64_t> out;
  std::string_view rest = text.substr(1, text.size() - 2);
  while (!rest.empty()) {
    const auto sp = rest.find(' ');
    const std::string_view tok = rest.substr(0, sp);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      fail(ErrorCode::parse_error, "bad array element '" + std::string(tok) + "'");
    }
    out.push_back(v);
    rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp + 1);
  }
  return out;
}

}  // namespace mods::cli
