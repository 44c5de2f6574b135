#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pcashrink/matrix.hpp"

namespace pcashrink {

struct Dataset {
  Mat features;  // N x n
  std::vector<std::string> labels;
  std::string name;

  std::size_t size() const noexcept { return features.rows(); }
  std::size_t dim() const noexcept { return features.cols(); }
};

/// Selects the label column by zero-based index (negative counts from the
/// end, -1 being the last column) or by header name.
using LabelColumn = std::variant<long, std::string>;

struct CsvOptions {
  LabelColumn label_column = -1L;
  bool header = false;
  char delimiter = ',';
};

/// Parses a delimited text file. Empty lines are skipped. Throws io when the
/// file cannot be read and parse (with row/column) on empty input, ragged
/// rows or non-numeric feature cells.
Dataset load_csv(const std::string& path, const CsvOptions& options = {});
Dataset parse_csv(const std::string& text, const CsvOptions& options = {},
                  const std::string& name = "inline");

/// Parses "3", "-1", "last" or a header name into a selector.
LabelColumn parse_label_column(const std::string& text);

}  // namespace pcashrink
