#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace esf {

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;  // empty when the file has no header
  std::vector<std::vector<std::string>> rows;
};

/// Minimal CSV reader: comma separated, no quoting, blank lines skipped.
/// Parse errors report 1-based line numbers.
CsvTable read_csv(const std::string& path, bool has_header);

double parse_double_field(const std::string& field, const std::string& path,
                          std::size_t line_no);

Eigen::MatrixXd read_dense_matrix_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace esf
