#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shannon {

using Element = std::uint32_t;
using Cover = std::pair<Element, Element>;  // (lower, upper)

// A finite lattice with the order relation and both operation tables
// materialized. Immutable after construction.
class Lattice {
 public:
  /// Builds and validates a lattice from (lower, upper) pairs. The stored
  /// cover relation is the transitive reduction of the input.
  static Lattice from_covers(std::size_t size, std::span<const Cover> covers,
                             std::vector<std::string> names = {});

  /// Builds a lattice from a full order matrix, leq[x * size + y] == x <= y.
  static Lattice from_order(std::size_t size, const std::vector<char>& leq,
                            std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const { return leq_[x * size_ + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  Element meet(Element x, Element y) const { return meet_[x * size_ + y]; }
  Element join(Element x, Element y) const { return join_[x * size_ + y]; }
  Element join(Element x, Element y, Element z) const { return join(join(x, y), z); }

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }

  /// Length of the longest chain from the bottom to x.
  std::size_t height(Element x) const { return height_[x]; }

  bool has_names() const { return !names_.empty(); }
  std::string name(Element x) const;
  const std::vector<std::string>& names() const { return names_; }
  /// Looks up an element by label or decimal index.
  std::optional<Element> find(const std::string& label) const;

  /// Relabels: element x of this lattice becomes perm[x].
  Lattice permuted(std::span<const Element> perm) const;
  Lattice dual() const;

  const std::vector<char>& order_matrix() const { return leq_; }

 private:
  Lattice() = default;
  void finish(std::vector<std::string> names);

  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::size_t> height_;
  std::vector<std::string> names_;
};

struct LatticeProfile {
  std::vector<Element> meet_irreducibles;
  std::vector<Element> join_irreducibles;
  std::vector<Element> double_irreducibles;
  bool is_modular = false;
  bool is_distributive = false;
  bool is_lower_locally_distributive = false;
  bool is_atomistic = false;
  std::optional<std::size_t> order_dimension;  // distributive lattices only
};

bool is_modular(const Lattice& lattice);
bool is_distributive(const Lattice& lattice);
bool is_lower_locally_distributive(const Lattice& lattice);
bool is_atomistic(const Lattice& lattice);
std::vector<Element> meet_irreducibles(const Lattice& lattice);
std::vector<Element> join_irreducibles(const Lattice& lattice);

LatticeProfile classify(const Lattice& lattice);

/// Byte string equal for two lattices exactly when they are isomorphic.
std::string canonical_form(const Lattice& lattice);
/// Hex FNV-1a digest of canonical_form, used in report headers.
std::string canonical_digest(const Lattice& lattice);
std::string to_hex(const std::string& bytes);

/// Named lattices: chain_k, boolean_n, m_n, n5, s7, grid_mxn, lld11,
/// free_distributive_3, free_modular_3.
Lattice catalog(const std::string& name, std::span<const int> params = {});
std::vector<std::string> catalog_names();

/// Elements of a meet-closed subset, viewed as a lattice under the host
/// order. Throws NotALattice when the subset is not meet-closed or misses top.
Lattice induced_lattice(const Lattice& host, std::span<const Element> subset);

}  // namespace shannon
