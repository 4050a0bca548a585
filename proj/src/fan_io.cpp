#include "toric/fan_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toric {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  size_t start = 0;
  while (start < s.size() && is_space(s[start])) ++start;
  return s.substr(start);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool looks_like_integer(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  return std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
}

Int parse_int(const std::string& t, int line) {
  if (!looks_like_integer(t)) throw ParseError(line, "'" + t + "' is not an integer");
  return Int(t);
}

int parse_index(const std::string& t, int line, int limit) {
  Int v = parse_int(t, line);
  if (v < 0 || v >= limit)
    throw ParseError(line, "ray index " + t + " out of range [0," + std::to_string(limit - 1) +
                               "]");
  return v.convert_to<int>();
}

}  // namespace

FanDocument parse_fan(const std::string& text) {
  FanDocument doc;
  enum class Section { Start, Rays, MaxCones } section = Section::Start;
  bool have_dim = false;

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.rfind("dim:", 0) == 0) {
      if (have_dim) throw ParseError(line_no, "duplicate 'dim:' line");
      if (section != Section::Start) throw ParseError(line_no, "'dim:' must come first");
      auto toks = tokens(line.substr(4));
      if (toks.size() != 1) throw ParseError(line_no, "'dim:' expects one integer");
      Int d = parse_int(toks[0], line_no);
      if (d < 1 || d > 64) throw ParseError(line_no, "dimension must be in [1,64]");
      doc.dim = d.convert_to<int>();
      have_dim = true;
      continue;
    }
    if (line == "rays:") {
      if (!have_dim) throw ParseError(line_no, "'rays:' before 'dim:'");
      if (section != Section::Start) throw ParseError(line_no, "duplicate 'rays:' section");
      section = Section::Rays;
      continue;
    }
    if (line == "maxcones:") {
      if (section != Section::Rays) throw ParseError(line_no, "'maxcones:' before 'rays:'");
      section = Section::MaxCones;
      continue;
    }

    auto toks = tokens(line);
    switch (section) {
      case Section::Start:
        throw ParseError(line_no, "expected 'dim:' before '" + line + "'");
      case Section::Rays: {
        if (static_cast<int>(toks.size()) != doc.dim)
          throw ParseError(line_no, "ray row has " + std::to_string(toks.size()) +
                                        " entries; expected " + std::to_string(doc.dim));
        std::vector<Int> row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(parse_int(t, line_no));
        doc.ray_rows.push_back(std::move(row));
        break;
      }
      case Section::MaxCones: {
        std::vector<int> row;
        row.reserve(toks.size());
        for (const auto& t : toks)
          row.push_back(parse_index(t, line_no, static_cast<int>(doc.ray_rows.size())));
        doc.cone_rows.push_back(std::move(row));
        break;
      }
    }
  }

  if (!have_dim) throw ParseError(line_no, "missing 'dim:' section");
  if (section != Section::MaxCones) throw ParseError(line_no, "missing 'maxcones:' section");
  if (doc.ray_rows.empty()) throw ParseError(line_no, "'rays:' section is empty");
  if (doc.cone_rows.empty()) throw ParseError(line_no, "'maxcones:' section is empty");
  return doc;
}

std::string serialize_fan(const FanDocument& doc) {
  std::ostringstream os;
  os << "dim: " << doc.dim << "\n";
  os << "rays:\n";
  for (const auto& row : doc.ray_rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  os << "maxcones:\n";
  for (const auto& row : doc.cone_rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

FanDocument document_from_fan(const Fan& fan, const std::string& name) {
  FanDocument doc;
  doc.dim = fan.dim();
  doc.name = name;
  for (const auto& r : fan.rays()) doc.ray_rows.push_back(r.coords());
  for (const auto& c : fan.max_cones()) doc.cone_rows.push_back(c.ray_ids);
  return doc;
}

BuildResult build_document(const FanDocument& doc) {
  std::vector<LatticeVector> rays;
  rays.reserve(doc.ray_rows.size());
  for (const auto& row : doc.ray_rows) rays.emplace_back(row);
  return build_fan(doc.dim, std::move(rays), doc.cone_rows);
}

}  // namespace toric
