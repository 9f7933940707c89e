// Text I/O: shortest round-trip decimal formatting, CSV reading/writing with
// missing values as empty fields, and the geometric checkpoint grids used by
// the simulate commands.

#ifndef RANCHER_IO_HPP
#define RANCHER_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rancher {

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
std::string format_u64(std::uint64_t v);

struct CsvError : std::runtime_error {
  CsvError(std::size_t row_, const std::string& what)
      : std::runtime_error(what), row(row_) {}
  std::size_t row;  // 1-based, header is row 1
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // ragged rows are a CsvError

  std::optional<std::size_t> column(std::string_view name) const;
};

// Strict comma-separated parser (no quoting; our writers never quote).
// Throws CsvError with the offending row number.
CsvTable read_csv(std::istream& in);

// Parse a cell into a double; empty cells are missing. Throws CsvError.
std::optional<double> parse_cell(const std::string& cell, std::size_t row);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::span<const std::string_view> names);
  void cell(std::optional<double> v);
  void cell(double v);
  void cell(std::uint64_t v);
  void cell(std::string_view raw);
  void end_row();

 private:
  std::ostream& out_;
  bool at_row_start_ = true;
};

// Checkpoints 0, 1, ..., geometric with `per_decade` points per decade,
// always including `steps` itself. Sorted, deduplicated.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t steps,
                                                 int per_decade = 25);

// Every integer 0..steps.
std::vector<std::uint64_t> all_checkpoints(std::uint64_t steps);

}  // namespace rancher

#endif
