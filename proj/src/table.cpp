#include "hollab/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hollab {

OutputFormat parse_format(const std::string& s) {
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + s);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
  os << "\n";
}

void md_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  os << "|";
  for (auto c : cells) {
    for (std::size_t i = 0; (i = c.find('|', i)) != std::string::npos; i += 2) c.replace(i, 1, "\\|");
    os << " " << c << " |";
  }
  os << "\n";
}

}  // namespace

std::string render(const Table& t, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown:
      md_row(os, t.columns);
      os << "|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
      os << "\n";
      for (const auto& r : t.rows) md_row(os, r);
      break;
    case OutputFormat::csv:
      csv_row(os, t.columns);
      for (const auto& r : t.rows) csv_row(os, r);
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["columns"] = t.columns;
      j["rows"] = t.rows;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') cell += '"', ++i;
      else if (ch == '"') quoted = false;
      else cell += ch;
    } else if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      rec.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (ch == '\n') {
      rec.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(rec));
      rec.clear();
      any = false;
    } else if (ch != '\r') {
      cell += ch;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in csv");
  if (any) {
    rec.push_back(std::move(cell));
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw std::invalid_argument("empty csv");
  Table t;
  t.columns = records.front();
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != t.columns.size()) throw std::invalid_argument("ragged csv row " + std::to_string(i));
    t.rows.push_back(std::move(records[i]));
  }
  return t;
}

Table parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Table t;
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  return t;
}

}  // namespace hollab
