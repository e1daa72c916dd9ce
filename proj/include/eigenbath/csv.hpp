#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace eigenbath {

// Numeric table with optional "key=value" metadata lines (written as
// comments ahead of the header row).
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits; round-trips any double exactly.
std::string format_double(double value);

// UTF-8, comma separated, one header row, one record per row.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

// Reads a file produced by write_csv (metadata comments preserved).
CsvTable read_csv(const std::filesystem::path& path);

// Dense complex matrix as CSV, one line per matrix row, entries flattened
// row-major into re,im pairs.
void write_matrix_csv(const std::filesystem::path& path,
                      const Eigen::MatrixXcd& matrix);
Eigen::MatrixXcd read_matrix_csv(const std::filesystem::path& path);

}  // namespace eigenbath
