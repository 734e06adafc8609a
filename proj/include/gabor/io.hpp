#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gabor {

/// Numeric CSV with a required header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws InvalidArgument naming the column.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal rendering ("%.17g"), with nan/inf spelled out.
std::string format_double(double v);

/// Writes text to a file, creating parent directories. Throws IoFailure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace gabor
