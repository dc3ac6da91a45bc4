#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pairfold/pairing.hpp"

namespace pairfold {

enum class TableFormat { Text, Csv };

/// A rows x cols window of a scheme's values, with index headers. The row
/// header is the first argument m, the column header the second argument n.
/// Origins must not fall below the scheme's domain (1 for f, 0 otherwise).
struct TableSpec {
  Scheme scheme = Scheme::F;
  Int row_start = 1;
  Int col_start = 1;
  std::size_t rows = 10;
  std::size_t cols = 10;
  TableFormat format = TableFormat::Text;
};

/// Renders the requested window. Every cell is the corresponding scheme
/// value; the renderer is a view over pair_value and computes nothing else.
inline std::string render_table(const TableSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    throw UsageError("table requires rows >= 1 and cols >= 1");
  const Int origin = scheme_origin(spec.scheme);
  if (spec.row_start < origin || spec.col_start < origin)
    throw UsageError("scheme " + std::string(to_string(spec.scheme)) +
                     " tables start at " + origin.str() + " or above");

  // (rows + 1) x (cols + 1) cell grid, headers included.
  std::vector<std::vector<std::string>> grid;
  grid.reserve(spec.rows + 1);
  {
    std::vector<std::string> head;
    head.reserve(spec.cols + 1);
    head.emplace_back();
    for (std::size_t j = 0; j < spec.cols; ++j)
      head.push_back(Int(spec.col_start + j).str());
    grid.push_back(std::move(head));
  }
  for (std::size_t i = 0; i < spec.rows; ++i) {
    const Int m = spec.row_start + i;
    std::vector<std::string> row;
    row.reserve(spec.cols + 1);
    row.push_back(m.str());
    for (std::size_t j = 0; j < spec.cols; ++j)
      row.push_back(pair_value(spec.scheme, m, spec.col_start + j).str());
    grid.push_back(std::move(row));
  }

  std::string out;
  if (spec.format == TableFormat::Csv) {
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ',';
        out += row[j];
      }
      out += '\n';
    }
    return out;
  }

  std::vector<std::size_t> width(spec.cols + 1, 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j].size() > width[j]) width[j] = row[j].size();
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += "  ";
      out.append(width[j] - row[j].size(), ' ');
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

}  // namespace pairfold
