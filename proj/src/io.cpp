#include "ffgeom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ffgeom {

namespace {

std::string strip(std::string s) {
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::uint64_t> split_numbers(const std::string& text, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad coordinate '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

LoadedPointSet read_pointset(std::istream& in, const FieldPtr& expected) {
  std::string raw;
  std::size_t line_no = 0;
  std::string header;
  while (header.empty() && std::getline(in, raw)) {
    ++line_no;
    header = strip(raw);
  }
  if (header.empty()) throw Error(Errc::ParseError, "missing header line");

  std::istringstream hs(header);
  std::string token, field_text, modulus_text;
  unsigned d = 0;
  while (hs >> token) {
    if (token.rfind("q=", 0) == 0) {
      field_text = token.substr(2);
    } else if (token.rfind("d=", 0) == 0) {
      const std::string v = token.substr(2);
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
      if (ec != std::errc() || ptr != v.data() + v.size() || d == 0)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad dimension '" + v + "'");
    } else if (token.rfind("modulus=", 0) == 0) {
      modulus_text = token;
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unexpected header token '" + token + "'");
    }
  }
  if (field_text.empty() || d == 0) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header needs q= and d=");
  FieldPtr field;
  try {
    field = Field::parse(modulus_text.empty() ? field_text : field_text + " " + modulus_text);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
  }
  if (expected) {
    // A header without modulus picks the default one; compare the resulting fields.
    if (!expected->same_as(*field))
      throw Error(Errc::FieldHeaderMismatch, "file declares GF(" + field->spec() + "), expected GF(" + expected->spec() + ")");
    field = expected;
  }

  std::vector<Point> pts;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string row = strip(raw);
    if (row.empty()) continue;
    const auto values = split_numbers(row, line_no);
    if (values.size() != d)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(d) + " coordinates");
    Point p(d);
    for (unsigned j = 0; j < d; ++j) {
      if (values[j] >= field->q())
        throw Error(Errc::CoordinateOutOfRange,
                    "line " + std::to_string(line_no) + ": coordinate " + std::to_string(values[j]) + " >= q=" + std::to_string(field->q()));
      p[j] = Fe{static_cast<std::uint32_t>(values[j])};
    }
    pts.push_back(std::move(p));
  }
  std::size_t removed = 0;
  PointSet set = PointSet::from_points(field, d, pts, &removed);
  return {std::move(set), removed};
}

LoadedPointSet load_pointset(const std::string& path, const FieldPtr& expected) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return read_pointset(in, expected);
}

void write_pointset(std::ostream& out, const PointSet& points) {
  const Field& f = points.field();
  out << "q=" << f.p();
  if (f.k() > 1) out << "^" << f.k();
  out << " d=" << points.dim();
  if (f.k() > 1) {
    out << " modulus=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) out << (i ? "," : "") << f.modulus()[i];
  }
  out << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (unsigned j = 0; j < points.dim(); ++j) out << (j ? "," : "") << p[j].v;
    out << "\n";
  }
}

Point parse_point(const std::string& text, const Field& field, unsigned d) {
  const auto values = split_numbers(text, 0);
  if (values.size() != d) throw Error(Errc::DimensionMismatch, "point '" + text + "' needs " + std::to_string(d) + " coordinates");
  Point p(d);
  for (unsigned j = 0; j < d; ++j) {
    if (values[j] >= field.q()) throw Error(Errc::CoordinateOutOfRange, "coordinate " + std::to_string(values[j]));
    p[j] = Fe{static_cast<std::uint32_t>(values[j])};
  }
  return p;
}

}  // namespace ffgeom
