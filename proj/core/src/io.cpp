#include "rancher/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace rancher {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t rowno = 0;
  while (std::getline(in, line)) {
    ++rowno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (rowno == 1) {
      table.header = split_row(line);
      if (table.header.empty() ||
          (table.header.size() == 1 && table.header[0].empty())) {
        throw CsvError(1, "csv: empty header row");
      }
      continue;
    }
    auto cells = split_row(line);
    if (cells.size() == 1 && cells[0].empty()) continue;  // blank line
    if (cells.size() != table.header.size()) {
      throw CsvError(rowno, "csv: row " + std::to_string(rowno) + " has " +
                                std::to_string(cells.size()) +
                                " fields, header has " +
                                std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (rowno == 0) throw CsvError(0, "csv: empty input");
  return table;
}

std::optional<double> parse_cell(const std::string& cell, std::size_t row) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
    throw CsvError(row, "csv: row " + std::to_string(row) +
                            ": not a number: '" + cell + "'");
  }
  return v;
}

void CsvWriter::header(std::span<const std::string_view> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out_ << ',';
    out_ << names[i];
  }
  out_ << '\n';
}

void CsvWriter::cell(std::optional<double> v) {
  if (!at_row_start_) out_ << ',';
  if (v.has_value()) out_ << format_double(*v);
  at_row_start_ = false;
}

void CsvWriter::cell(double v) { cell(std::optional<double>(v)); }

void CsvWriter::cell(std::uint64_t v) {
  if (!at_row_start_) out_ << ',';
  out_ << format_u64(v);
  at_row_start_ = false;
}

void CsvWriter::cell(std::string_view raw) {
  if (!at_row_start_) out_ << ',';
  out_ << raw;
  at_row_start_ = false;
}

void CsvWriter::end_row() {
  out_ << '\n';
  at_row_start_ = true;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t steps,
                                                 int per_decade) {
  std::vector<std::uint64_t> out{0};
  if (steps == 0) return out;
  const double step = 1.0 / std::max(1, per_decade);
  for (double e = 0.0;; e += step) {
    const double v = std::pow(10.0, e);
    if (v > static_cast<double>(steps) * (1.0 + 1e-12)) break;
    const auto n = static_cast<std::uint64_t>(std::llround(v));
    if (n >= 1 && n <= steps && n != out.back()) out.push_back(n);
  }
  if (out.back() != steps) out.push_back(steps);
  return out;
}

std::vector<std::uint64_t> all_checkpoints(std::uint64_t steps) {
  std::vector<std::uint64_t> out(steps + 1);
  for (std::uint64_t i = 0; i <= steps; ++i) out[i] = i;
  return out;
}

}  // namespace rancher
