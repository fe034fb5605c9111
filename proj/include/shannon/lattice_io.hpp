#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"

namespace shannon {

// ".lat" text format:
//   n <size>
//   names <t0> <t1> ...      (optional)
//   c <i> <j>                element i is covered by element j
//   d <i> <j>                dependency i -> j (closure-fd)
// '#' starts a comment; indices are 0-based.
struct LatFile {
  Lattice lattice;
  std::vector<Cover> dependencies;
};

LatFile parse_lat(std::istream& in);
LatFile parse_lat(const std::string& text);
LatFile read_lat_file(const std::string& path);

/// Reads only `d <i> <j>` lines (other line kinds are ignored).
std::vector<Cover> parse_dependencies(std::istream& in, std::size_t size);

void write_lat(std::ostream& out, const Lattice& lattice,
               const std::vector<Cover>& dependencies = {});
std::string to_lat(const Lattice& lattice);

}  // namespace shannon
