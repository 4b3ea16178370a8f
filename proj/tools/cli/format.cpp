#include "format.hpp"

namespace bncount::cli {

std::optional<Format> parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "tsv") return Format::tsv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

nlohmann::json to_json(const Document& doc) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : doc.inputs) out[key] = value;
  for (const auto& [key, value] : doc.results) out[key] = value;
  for (const auto& [name, fields] : doc.groups) {
    nlohmann::json group = nlohmann::json::object();
    for (const auto& [key, value] : fields) group[key] = value;
    out[name] = std::move(group);
  }
  for (const auto& table : doc.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json item = nlohmann::json::object();
      for (std::size_t c = 0; c < table.header.size() && c < row.size(); ++c) {
        item[table.header[c]] = row[c];
      }
      rows.push_back(std::move(item));
    }
    out[table.name] = std::move(rows);
  }
  return out;
}

namespace {

void write_row(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c) out << '\t';
    out << cells[c];
  }
  out << '\n';
}

void write_table(const Table& table, std::ostream& out) {
  write_row(table.header, out);
  for (const auto& row : table.rows) write_row(row, out);
}

}  // namespace

void render(const Document& doc, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << to_json(doc).dump(2) << '\n';
      return;
    case Format::tsv: {
      std::vector<std::string> header;
      std::vector<std::string> values;
      for (const Fields* fields : {&doc.inputs, &doc.results}) {
        for (const auto& [key, value] : *fields) {
          header.push_back(key);
          values.push_back(value);
        }
      }
      for (const auto& [name, fields] : doc.groups) {
        for (const auto& [key, value] : fields) {
          header.push_back(name + "." + key);
          values.push_back(value);
        }
      }
      bool first = true;
      if (!header.empty()) {
        write_row(header, out);
        write_row(values, out);
        first = false;
      }
      for (const auto& table : doc.tables) {
        if (!first) out << '\n';
        write_table(table, out);
        first = false;
      }
      return;
    }
    case Format::plain: {
      if (doc.results.size() == 1 && doc.groups.empty() && doc.tables.empty()) {
        out << doc.results.front().second << '\n';
        return;
      }
      for (const auto& [key, value] : doc.results) out << key << ": " << value << '\n';
      for (const auto& [name, fields] : doc.groups) {
        for (const auto& [key, value] : fields) out << name << '.' << key << ": " << value << '\n';
      }
      for (const auto& table : doc.tables) {
        if (!doc.results.empty() || !doc.groups.empty()) out << table.name << ":\n";
        write_table(table, out);
      }
      return;
    }
  }
}

}  // namespace bncount::cli
