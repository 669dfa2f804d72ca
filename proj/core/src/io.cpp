#include "p1kit/io.hpp"

#include <json.hpp>

#include "p1kit/errors.hpp"

namespace p1kit {

using nlohmann::json;

namespace {

json entries_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw JsonError("top-level JSON value must be an object", 0);
    return doc;
  } catch (const json::parse_error& e) {
    throw JsonError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(),
                    e.byte);
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw JsonError(what, 0); }

std::size_t get_size(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing key \"") + key + "\"");
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
    schema_error(std::string("key \"") + key + "\" must be a nonnegative integer");
  return it->get<std::size_t>();
}

Scalar get_scalar(const Field& f, const json& v) {
  try {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar(f, mpq_class(std::to_string(v.get<long long>())));
  } catch (const JsonError&) {
    throw;
  } catch (const std::exception& e) {
    schema_error(std::string("bad matrix entry ") + v.dump() + ": " + e.what());
  }
  schema_error("matrix entry must be a string or an integer, got " + v.dump());
}

// For zero-column matrices the entries may be [] or a list of empty rows.
FieldMatrix get_entries(const Field& f, const json& v, std::size_t rows, std::size_t cols,
                        const std::string& name) {
  if (!v.is_array()) schema_error("\"" + name + "\" must be an array of rows");
  FieldMatrix m(f, rows, cols);
  if (cols == 0 && v.empty()) return m;
  if (v.size() != rows)
    schema_error("\"" + name + "\" has " + std::to_string(v.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      schema_error("\"" + name + "\" row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, get_scalar(f, row[j]));
  }
  return m;
}

Field get_field(const json& doc, const Field& fallback) {
  auto it = doc.find("field");
  if (it == doc.end()) return fallback;
  if (!it->is_string()) schema_error("\"field\" must be a string");
  try {
    return Field::parse(it->get<std::string>());
  } catch (const std::exception& e) {
    schema_error(std::string("bad field: ") + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

std::string matrix_to_json(const FieldMatrix& m) {
  json doc{{"field", m.field().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_json(m)}};
  return doc.dump();
}

FieldMatrix matrix_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const Field f = get_field(doc, Field::rationals());
  const std::size_t rows = get_size(doc, "rows"), cols = get_size(doc, "cols");
  return get_entries(f, require(doc, "entries"), rows, cols, "entries");
}

std::string pencil_to_json(const Pencil& p) {
  json doc{{"field", p.field().name()},
           {"D", p.source_rank()},
           {"r", p.cokernel_rank()},
           {"A", entries_json(p.a())},
           {"B", entries_json(p.b())}};
  return doc.dump();
}

Pencil pencil_from_json(std::string_view text, const Field& default_field) {
  const json doc = parse_document(text);
  const Field f = get_field(doc, default_field);
  const std::size_t d = get_size(doc, "D"), r = get_size(doc, "r");
  if (r == 0) schema_error("\"r\" must be at least 1");
  FieldMatrix a = get_entries(f, require(doc, "A"), d + r, d, "A");
  FieldMatrix b = get_entries(f, require(doc, "B"), d + r, d, "B");
  return Pencil(std::move(a), std::move(b));
}

}  // namespace p1kit
