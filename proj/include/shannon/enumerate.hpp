#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

enum class LatticeFilter { none, modular, distributive, lower_locally_distributive };
std::string to_string(LatticeFilter filter);
LatticeFilter parse_filter(const std::string& text);
bool accepts(LatticeFilter filter, const Lattice& lattice);

/// One representative per isomorphism class with at most max_size elements,
/// ordered by (size, canonical_form). Throws SizeTooLarge above 11.
std::vector<Lattice> enumerate_lattices(std::size_t max_size,
                                        LatticeFilter filter = LatticeFilter::none);

struct ClassifiedLattice {
  Lattice lattice;
  std::string canonical_hex;
  std::string status;  // verdict name or error kind
  std::optional<IntVector> witness;
  std::vector<IntVector> uncertified;
};

struct ClassificationReport {
  std::map<std::size_t, std::size_t> counts_by_size;
  std::map<std::string, std::size_t> histogram;
  std::vector<ClassifiedLattice> flagged;  // non_shannon, undecided, errors
  std::size_t total = 0;
};

ClassificationReport classify_all(std::size_t max_size, LatticeFilter filter,
                                  const Budget& budget = {});

}  // namespace shannon
