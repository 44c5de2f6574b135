#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pcashrink/dataset.hpp"
#include "pcashrink/error.hpp"

namespace pcashrink {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  std::string out(text.substr(first, last - first + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split(std::string_view line, char delimiter) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column + 1);
}

std::size_t resolve_label(const LabelColumn& selector, const std::vector<std::string>& header,
                          std::size_t columns) {
  if (const auto* name = std::get_if<std::string>(&selector)) {
    if (header.empty()) {
      throw Error(ErrorCode::Parse, "label column '" + *name + "' given by name but no header");
    }
    const auto it = std::find(header.begin(), header.end(), *name);
    if (it == header.end()) throw Error(ErrorCode::Parse, "no column named '" + *name + "'");
    return static_cast<std::size_t>(it - header.begin());
  }
  const long index = std::get<long>(selector);
  const long resolved = index < 0 ? static_cast<long>(columns) + index : index;
  if (resolved < 0 || resolved >= static_cast<long>(columns)) {
    throw Error(ErrorCode::Parse, "label column " + std::to_string(index) + " out of range for " +
                                      std::to_string(columns) + " columns");
  }
  return static_cast<std::size_t>(resolved);
}

}  // namespace

LabelColumn parse_label_column(const std::string& text) {
  if (text == "last") return -1L;
  if (!text.empty()) {
    char* end = nullptr;
    errno = 0;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (errno == 0 && end == text.c_str() + text.size()) return value;
  }
  return text;
}

Dataset parse_csv(const std::string& text, const CsvOptions& options, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split(line, options.delimiter);
    if (options.header && header.empty()) {
      header = std::move(cells);
      continue;
    }
    rows.push_back(std::move(cells));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, name + ": no data rows");

  const std::size_t columns = rows.front().size();
  if (!header.empty() && header.size() != columns) {
    throw Error(ErrorCode::Parse, name + ": header has " + std::to_string(header.size()) +
                                      " columns, data has " + std::to_string(columns));
  }
  if (columns < 2) throw Error(ErrorCode::Parse, name + ": need a label and at least one feature");
  const std::size_t label_col = resolve_label(options.label_column, header, columns);

  Dataset ds;
  ds.name = name;
  ds.features = Mat(rows.size(), columns - 1);
  ds.labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != columns) {
      throw Error(ErrorCode::Parse, name + ": " + location(row_lines[r], 0) + ": expected " +
                                        std::to_string(columns) + " cells, found " +
                                        std::to_string(cells.size()));
    }
    std::size_t feature = 0;
    for (std::size_t c = 0; c < columns; ++c) {
      if (c == label_col) {
        ds.labels.push_back(cells[c]);
        continue;
      }
      const std::string& cell = cells[c];
      char* end = nullptr;
      errno = 0;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(value)) {
        throw Error(ErrorCode::Parse, name + ": " + location(row_lines[r], c) +
                                          ": non-numeric feature '" + cell + "'");
      }
      ds.features(r, feature++) = value;
    }
  }
  return ds;
}

Dataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw Error(ErrorCode::Io, "failed reading '" + path + "'");
  return parse_csv(buffer.str(), options, path);
}

}  // namespace pcashrink
