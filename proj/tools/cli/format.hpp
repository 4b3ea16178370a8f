#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bncount::cli {

enum class Format { plain, tsv, json };

std::optional<Format> parse_format(const std::string& name);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Everything a subcommand prints. Values are already rendered as decimal
// strings ("p/q" for rationals).
struct Document {
  Fields inputs;                                    // echoed in json/tsv only
  Fields results;
  std::vector<std::pair<std::string, Fields>> groups;  // nested json objects
  std::vector<Table> tables;
};

// Canonical JSON: sorted keys, string values, two-space indent.
nlohmann::json to_json(const Document& doc);

// plain: results only; a lone result prints as its bare value, otherwise
//        "key: value" lines, then each table tab-separated with a header.
// tsv:   one header row and one value row for inputs + results + groups
//        (group keys as "group.key"), then a blank line and each table.
//        A document with tables and no fields prints the tables only.
// json:  to_json(doc).dump(2) followed by a newline.
void render(const Document& doc, Format format, std::ostream& out);

}  // namespace bncount::cli
