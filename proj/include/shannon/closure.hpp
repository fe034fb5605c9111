#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"
#include "shannon/rational.hpp"

namespace shannon {

// A relation x -> y between elements of one lattice, stored as a dense
// matrix sized to that lattice.
class DependencyRelation {
 public:
  explicit DependencyRelation(std::size_t size = 0)
      : size_(size), holds_(size * size, 0) {}

  static DependencyRelation from_pairs(std::size_t size, std::span<const Cover> pairs);

  std::size_t size() const { return size_; }
  bool holds(Element x, Element y) const { return holds_[x * size_ + y] != 0; }
  bool add(Element x, Element y);  // true if new
  std::vector<Cover> pairs() const;

  friend bool operator==(const DependencyRelation&, const DependencyRelation&) = default;

 private:
  std::size_t size_;
  std::vector<char> holds_;
};

struct ClosureOperator {
  std::vector<Element> cl;
};

struct ClosureSystem {
  std::vector<Element> closed;           // host elements, ascending
  std::vector<std::size_t> projection;   // host element -> index into closed
  Lattice induced;
};

struct ClosedLattice {
  ClosureOperator closure;
  ClosureSystem system;
};

/// The order relation x >= y as a dependency relation.
DependencyRelation order_relation(const Lattice& lattice);

/// Least relation containing base that is closed under transitivity,
/// reflexivity and augmentation.
DependencyRelation armstrong_close(const Lattice& lattice, const DependencyRelation& base);

/// Name of the first violated Armstrong axiom with a witness, if any.
std::optional<std::string> armstrong_violation(const Lattice& lattice,
                                               const DependencyRelation& relation);

/// cl(x) = join of every y with x -> y. Throws NotClosed.
ClosedLattice closed_lattice(const Lattice& lattice, const DependencyRelation& relation);

/// x -> y iff h(x v y) == h(x). Throws NotPolymatroid.
DependencyRelation polymatroid_dependence(const Lattice& lattice, std::span<const Rational> h);
ClosedLattice closed_lattice_of_polymatroid(const Lattice& lattice, std::span<const Rational> h);

/// Closure system generated by a meet-closed subset containing top:
/// cl(x) is the meet of all members above x.
ClosedLattice closure_of_subset(const Lattice& lattice, std::span<const Element> subset);

struct TupleTable {
  std::size_t attributes = 0;
  // rows[t][i]: binary attribute i on tuple t. Tuple t corresponds to the
  // principal ideal of lattice element t.
  std::vector<std::vector<char>> rows;
};

/// a -> b in the table: equal values on the attributes below a force equal
/// values on the attributes below b.
DependencyRelation table_dependencies(const Lattice& lattice, const TupleTable& table);

struct TupleRealization {
  TupleTable table;
  DependencyRelation dependencies;
};

/// Principal-ideal embedding with one binary attribute per element. Verifies
/// that a -> b holds in the table exactly when a >= b.
TupleRealization tuple_realization(const Lattice& lattice);

}  // namespace shannon
