#include "odograph/io.hpp"

#include "odograph/error.hpp"

#include <cctype>
#include <sstream>

namespace odograph {

namespace {

std::string strip(std::string text, const std::string& brackets) {
  auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && issp(text.front())) text.erase(text.begin());
  while (!text.empty() && issp(text.back())) text.pop_back();
  if (text.size() >= 2 && text.front() == brackets[0] && text.back() == brackets[1]) {
    text = text.substr(1, text.size() - 2);
  }
  return text;
}

std::vector<unsigned long> parse_list(const std::string& raw, const std::string& brackets, const char* what) {
  std::string text = strip(raw, brackets);
  std::vector<unsigned long> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = strip(item, "  ");
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::Parse, std::string("bad ") + what + " '" + raw + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

unsigned long json_count(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorKind::Parse, std::string(what) + " must be a non-negative integer");
  }
  return v.get<unsigned long>();
}

}  // namespace

SpecPtr spec_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_array()) {
    throw Error(ErrorKind::Parse, "spec needs an \"n\" array");
  }
  std::vector<unsigned long> sizes;
  for (const auto& v : doc["n"]) sizes.push_back(json_count(v, "alphabet size"));
  if (!doc.contains("theta") || (doc["theta"].is_string() && doc["theta"] == "standard")) {
    return make_standard(sizes);
  }
  const Json& theta = doc["theta"];
  if (!theta.is_object()) throw Error(ErrorKind::Parse, "theta must be \"standard\" or an object of tables");
  std::map<std::pair<std::size_t, std::size_t>, ThetaTable> tables;
  for (const auto& [key, value] : theta.items()) {
    auto pair = parse_list(key, "()", "table key");
    if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1 || pair[0] > sizes.size() || pair[1] > sizes.size()) {
      throw Error(ErrorKind::Parse, "bad table key '" + key + "'");
    }
    if (!value.is_array()) throw Error(ErrorKind::Parse, "table " + key + " must be an array of rows");
    ThetaTable table;
    for (const auto& row : value) {
      if (!row.is_array()) throw Error(ErrorKind::Parse, "table " + key + " rows must be arrays");
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (const auto& cell : row) {
        if (!cell.is_string()) throw Error(ErrorKind::Parse, "table entries are strings \"t',s'\"");
        auto ts = parse_list(cell.get<std::string>(), "()", "table entry");
        if (ts.size() != 2) throw Error(ErrorKind::Parse, "table entry '" + cell.get<std::string>() + "'");
        cells.push_back({ts[0], ts[1]});
      }
      table.push_back(std::move(cells));
    }
    tables[{pair[0] - 1, pair[1] - 1}] = std::move(table);
  }
  return std::make_shared<const KGraphSpec>(KGraphSpec::from_tables(sizes, tables));
}

Json spec_to_json(const KGraphSpec& spec) {
  Json doc;
  doc["n"] = spec.sizes();
  if (spec.flavor() == ThetaFlavor::StandardProduct) {
    doc["theta"] = "standard";
    return doc;
  }
  Json theta = Json::object();
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t j = i + 1; j < spec.rank(); ++j) {
      Json rows = Json::array();
      for (const auto& row : spec.table(i, j)) {
        Json cells = Json::array();
        for (auto [t, s] : row) cells.push_back(std::to_string(t) + "," + std::to_string(s));
        rows.push_back(cells);
      }
      theta["(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"] = rows;
    }
  }
  doc["theta"] = theta;
  return doc;
}

std::vector<unsigned long> parse_sizes(const std::string& text) {
  auto sizes = parse_list(text, "[]", "alphabet sizes");
  if (sizes.empty()) throw Error(ErrorKind::Parse, "need at least one alphabet size");
  return sizes;
}

Degree parse_degree(const std::string& text, std::size_t rank) {
  auto parts = parse_list(text, "()", "degree");
  if (parts.size() != rank) {
    throw Error(ErrorKind::DegreeMismatch,
                "degree '" + text + "' has " + std::to_string(parts.size()) + " entries, expected " +
                    std::to_string(rank));
  }
  return Degree(parts);
}

Word parse_word(const SpecPtr& spec, const std::string& text) {
  std::string body = strip(text, "()");
  std::stringstream in(body);
  std::string token;
  std::vector<Letter> letters;
  while (in >> token) {
    auto colon = token.find(':');
    bool ok = token.size() > 1 && token[0] == 'x' && colon != std::string::npos && colon > 1 &&
              colon + 1 < token.size();
    if (ok) {
      std::string color = token.substr(1, colon - 1), value = token.substr(colon + 1);
      ok = color.find_first_not_of("0123456789") == std::string::npos &&
           value.find_first_not_of("0123456789") == std::string::npos;
      if (ok) {
        unsigned long c = std::stoul(color);
        if (c < 1) throw Error(ErrorKind::LetterOutOfRange, "generator indices start at 1 in '" + token + "'");
        letters.push_back(Letter{c - 1, std::stoul(value)});
        continue;
      }
    }
    throw Error(ErrorKind::Parse, "bad letter '" + token + "', expected xI:S");
  }
  return Word(spec, std::move(letters));
}

std::string format_word(const Word& word) { return word.is_empty() ? "()" : word.to_string(); }

Json degree_to_json(const Degree& d) { return Json(d.parts()); }

Json bigint_to_json(const BigInt& v) { return v.get_str(); }

Json ideal_to_json(const ConstructibleIdeal& ideal) {
  Json doc;
  doc["degree"] = degree_to_json(ideal.degree());
  Json codes = Json::array();
  for (const auto& c : ideal.codes()) codes.push_back(bigint_to_json(c));
  doc["codes"] = codes;
  return doc;
}

ConstructibleIdeal ideal_from_json(const SpecPtr& spec, const Json& doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("codes") || !doc["degree"].is_array() ||
      !doc["codes"].is_array()) {
    throw Error(ErrorKind::Parse, "ideal needs \"degree\" and \"codes\" arrays");
  }
  std::vector<unsigned long> parts;
  for (const auto& v : doc["degree"]) parts.push_back(json_count(v, "degree entry"));
  if (parts.size() != spec->rank()) throw Error(ErrorKind::DegreeMismatch, "ideal degree has the wrong rank");
  std::vector<BigInt> codes;
  for (const auto& c : doc["codes"]) {
    if (c.is_string()) {
      codes.push_back(parse_bigint(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      codes.emplace_back(std::to_string(c.get<long long>()));
    } else {
      throw Error(ErrorKind::Parse, "ideal codes are decimal strings");
    }
  }
  return ConstructibleIdeal::from_codes(spec, Degree(parts), std::move(codes));
}

}  // namespace odograph
