#pragma once

#include <string>
#include <vector>

namespace hollab {

enum class OutputFormat { markdown, csv, json };
OutputFormat parse_format(const std::string& s);  // std::invalid_argument otherwise

// A table of strings; every numeric cell is already exact text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const Table&) const = default;
};

std::string render(const Table& t, OutputFormat f);
// Inverses of the csv and json renderings.
Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

}  // namespace hollab
