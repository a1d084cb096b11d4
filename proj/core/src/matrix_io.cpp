#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"

namespace newsstyle {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::size_t FeatureMatrix::column(std::string_view name) const {
  for (std::size_t i = 0; i < features.size(); ++i)
    if (features[i] == name) return i;
  throw Error("matrix has no column " + std::string(name));
}

std::vector<std::optional<double>> FeatureMatrix::column_values(std::string_view name) const {
  const auto c = column(name);
  std::vector<std::optional<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.values[c]);
  return out;
}

FeatureMatrix make_matrix(std::span<const FeatureVector> vectors,
                          const std::vector<std::string>& features) {
  FeatureMatrix m;
  m.features = features;
  m.rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    FeatureRow row{v.doc_id, v.label, v.part, {}};
    row.values.reserve(features.size());
    for (const auto& f : features) row.values.push_back(v.get(f));
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

void write_field(std::ostream& out, std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << s;
    return;
  }
  out << '"';
  for (const char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

// Splits one CSV record; returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line_no,
                 const std::string& source) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++line_no;
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (quoted) {
        // Quoted field spans a newline.
        std::string more;
        if (!std::getline(in, more)) throw ParseError(source, line_no, "unterminated quote");
        ++line_no;
        field += '\n';
        line = std::move(more);
        i = 0;
        continue;
      }
      break;
    }
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && i + 1 == line.size()) {
      // CRLF line ending.
    } else {
      field += c;
    }
    ++i;
  }
  fields.push_back(std::move(field));
  return true;
}

std::optional<double> parse_cell(const std::string& s, const std::string& source,
                                 std::size_t line_no, const std::string& column) {
  if (s == "NA") return std::nullopt;
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError(source, line_no, "bad value '" + s + "' in column " + column);
  return v;
}

}  // namespace

void write_matrix(const FeatureMatrix& m, std::ostream& out) {
  out << "doc_id,label,part";
  for (const auto& f : m.features) {
    out << ',';
    write_field(out, f);
  }
  out << '\n';
  for (const auto& r : m.rows) {
    if (r.values.size() != m.features.size())
      throw Error("row " + r.doc_id + " has " + std::to_string(r.values.size()) +
                  " values for " + std::to_string(m.features.size()) + " columns");
    write_field(out, r.doc_id);
    out << ',' << to_string(r.label) << ',' << to_string(r.part);
    for (const auto& v : r.values) out << ',' << (v ? format_real(*v) : "NA");
    out << '\n';
  }
}

void write_matrix(const FeatureMatrix& m, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  write_matrix(m, out);
  if (!out) throw Error("write failure on " + file.string());
}

FeatureMatrix read_matrix(std::istream& in, const std::string& source) {
  FeatureMatrix m;
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  if (!read_record(in, fields, line_no, source))
    throw ParseError(source, 1, "empty feature matrix");
  if (fields.size() < 3 || fields[0] != "doc_id" || fields[1] != "label" || fields[2] != "part")
    throw ParseError(source, line_no, "header must start with doc_id,label,part");
  std::unordered_set<std::string> seen;
  for (std::size_t i = 3; i < fields.size(); ++i) {
    if (!is_known_feature(fields[i]))
      throw ParseError(source, line_no, "unknown feature column: " + fields[i]);
    if (!seen.insert(fields[i]).second)
      throw ParseError(source, line_no, "duplicate feature column: " + fields[i]);
    m.features.push_back(fields[i]);
  }
  while (read_record(in, fields, line_no, source)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != m.features.size() + 3)
      throw ParseError(source, line_no,
                       "ragged row: expected " + std::to_string(m.features.size() + 3) +
                           " fields, found " + std::to_string(fields.size()));
    FeatureRow row;
    row.doc_id = fields[0];
    const auto label = parse_label(fields[1]);
    if (!label) throw ParseError(source, line_no, "unknown label: " + fields[1]);
    row.label = *label;
    const auto part = parse_part(fields[2]);
    if (!part) throw ParseError(source, line_no, "unknown part: " + fields[2]);
    row.part = *part;
    for (std::size_t i = 0; i < m.features.size(); ++i)
      row.values.push_back(parse_cell(fields[i + 3], source, line_no, m.features[i]));
    m.rows.push_back(std::move(row));
  }
  return m;
}

FeatureMatrix read_matrix(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  return read_matrix(in, file.string());
}

}  // namespace newsstyle
