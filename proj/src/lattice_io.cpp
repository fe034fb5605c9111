#include "shannon/lattice_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "shannon/error.hpp"

namespace shannon {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Element read_index(std::istringstream& in, std::size_t line_no) {
  long long v = -1;
  if (!(in >> v) || v < 0)
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative index");
  return static_cast<Element>(v);
}

}  // namespace

LatFile parse_lat(std::istream& in) {
  std::optional<std::size_t> size;
  std::vector<std::string> names;
  std::vector<Cover> covers;
  std::vector<Cover> deps;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "n") {
      long long v = 0;
      if (!(line >> v) || v <= 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad size");
      size = static_cast<std::size_t>(v);
    } else if (tag == "names") {
      std::string t;
      while (line >> t) names.push_back(t);
    } else if (tag == "c" || tag == "d") {
      Element i = read_index(line, line_no);
      Element j = read_index(line, line_no);
      (tag == "c" ? covers : deps).emplace_back(i, j);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
    std::string extra;
    if (line >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing text '" + extra + "'");
  }
  if (!size) throw ParseError("missing 'n <size>' line");
  for (auto [a, b] : deps)
    if (a >= *size || b >= *size) throw ParseError("dependency index out of range");
  return LatFile{Lattice::from_covers(*size, covers, std::move(names)), std::move(deps)};
}

LatFile parse_lat(const std::string& text) {
  std::istringstream in(text);
  return parse_lat(in);
}

LatFile read_lat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_lat(in);
}

std::vector<Cover> parse_dependencies(std::istream& in, std::size_t size) {
  std::vector<Cover> deps;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string tag;
    if (!(line >> tag) || tag != "d") continue;
    Element i = read_index(line, line_no);
    Element j = read_index(line, line_no);
    if (i >= size || j >= size)
      throw ParseError("line " + std::to_string(line_no) + ": dependency index out of range");
    deps.emplace_back(i, j);
  }
  return deps;
}

void write_lat(std::ostream& out, const Lattice& lattice, const std::vector<Cover>& deps) {
  out << "n " << lattice.size() << '\n';
  if (lattice.has_names()) {
    out << "names";
    for (const auto& t : lattice.names()) out << ' ' << t;
    out << '\n';
  }
  for (auto [a, b] : lattice.covers()) out << "c " << a << ' ' << b << '\n';
  for (auto [a, b] : deps) out << "d " << a << ' ' << b << '\n';
}

std::string to_lat(const Lattice& lattice) {
  std::ostringstream out;
  write_lat(out, lattice);
  return out.str();
}

}  // namespace shannon
