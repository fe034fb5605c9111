#include "shannon/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shannon/error.hpp"
#include "shannon/poset.hpp"

namespace shannon {

namespace {

std::string pair_text(Element x, Element y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

Lattice Lattice::from_covers(std::size_t size, std::span<const Cover> covers,
                             std::vector<std::string> names) {
  if (size == 0) throw NoBoundedElements("a lattice needs at least one element");
  std::vector<std::vector<Element>> up(size);
  std::vector<std::size_t> indegree(size, 0);
  for (auto [a, b] : covers) {
    if (a >= size || b >= size)
      throw BadParams("cover " + pair_text(a, b) + " out of range for size " +
                      std::to_string(size));
    if (a == b) throw NotAPartialOrder("cycle: element " + std::to_string(a) + " covers itself");
    up[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; leftover elements lie on or above a cycle.
  std::vector<Element> order;
  order.reserve(size);
  std::vector<Element> ready;
  for (Element x = 0; x < size; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    Element x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (Element y : up[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (order.size() != size) {
    Element culprit = 0;
    for (Element x = 0; x < size; ++x)
      if (indegree[x] != 0) {
        culprit = x;
        break;
      }
    throw NotAPartialOrder("cycle detected through element " + std::to_string(culprit));
  }

  Lattice l;
  l.size_ = size;
  l.leq_.assign(size * size, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    char* row = &l.leq_[x * size];
    row[x] = 1;
    for (Element y : up[x]) {
      const char* other = &l.leq_[y * size];
      for (std::size_t z = 0; z < size; ++z) row[z] |= other[z];
    }
  }
  l.finish(std::move(names));
  return l;
}

Lattice Lattice::from_order(std::size_t size, const std::vector<char>& leq,
                            std::vector<std::string> names) {
  if (size == 0) throw NoBoundedElements("a lattice needs at least one element");
  if (leq.size() != size * size) throw BadParams("order matrix has the wrong size");
  auto at = [&](std::size_t x, std::size_t y) { return leq[x * size + y] != 0; };
  for (std::size_t x = 0; x < size; ++x) {
    if (!at(x, x)) throw NotAPartialOrder("not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && at(x, y) && at(y, x))
        throw NotAPartialOrder("not antisymmetric at " + pair_text(x, y));
      if (!at(x, y)) continue;
      for (std::size_t z = 0; z < size; ++z)
        if (at(y, z) && !at(x, z))
          throw NotAPartialOrder("not transitive at " + pair_text(x, y) + " and " +
                                 pair_text(y, z));
    }
  }
  Lattice l;
  l.size_ = size;
  l.leq_.assign(leq.begin(), leq.end());
  for (auto& c : l.leq_) c = c ? 1 : 0;
  l.finish(std::move(names));
  return l;
}

void Lattice::finish(std::vector<std::string> names) {
  const std::size_t n = size_;
  if (!names.empty() && names.size() != n)
    throw BadParams("expected " + std::to_string(n) + " names, got " +
                    std::to_string(names.size()));
  names_ = std::move(names);

  // Linear extension: ascending down-set size.
  std::vector<std::size_t> down(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) down[x] += leq(y, x) ? 1 : 0;
  std::vector<Element> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::stable_sort(ext.begin(), ext.end(),
                   [&](Element a, Element b) { return down[a] < down[b]; });

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      // least upper bound: first upper bound in the linear extension
      bool found = false;
      Element j = 0;
      for (Element z : ext)
        if (leq(x, z) && leq(y, z)) {
          j = z;
          found = true;
          break;
        }
      if (!found)
        throw NotALattice("elements " + pair_text(x, y) + " have no upper bound");
      for (Element z = 0; z < n; ++z)
        if (leq(x, z) && leq(y, z) && !leq(j, z))
          throw NotALattice("elements " + pair_text(x, y) + " have no least upper bound");
      found = false;
      Element m = 0;
      for (auto it = ext.rbegin(); it != ext.rend(); ++it)
        if (leq(*it, x) && leq(*it, y)) {
          m = *it;
          found = true;
          break;
        }
      if (!found)
        throw NotALattice("elements " + pair_text(x, y) + " have no lower bound");
      for (Element z = 0; z < n; ++z)
        if (leq(z, x) && leq(z, y) && !leq(z, m))
          throw NotALattice("elements " + pair_text(x, y) + " have no greatest lower bound");
      join_[x * n + y] = join_[y * n + x] = j;
      meet_[x * n + y] = meet_[y * n + x] = m;
    }
  }
  bottom_ = ext.front();
  top_ = ext.back();
  for (Element x = 0; x < n; ++x)
    if (!leq(bottom_, x) || !leq(x, top_))
      throw NoBoundedElements("no unique bottom and top element");

  covers_.clear();
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z)
        if (less(x, z) && less(z, y)) direct = false;
      if (direct) {
        covers_.emplace_back(x, y);
        upper_[x].push_back(y);
        lower_[y].push_back(x);
      }
    }

  height_.assign(n, 0);
  for (Element x : ext)
    for (Element y : upper_[x]) height_[y] = std::max(height_[y], height_[x] + 1);
}

std::string Lattice::name(Element x) const {
  return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<Element> Lattice::find(const std::string& label) const {
  for (Element x = 0; x < names_.size(); ++x)
    if (names_[x] == label) return x;
  if (!label.empty() && std::all_of(label.begin(), label.end(), ::isdigit)) {
    unsigned long v = std::stoul(label);
    if (v < size_) return static_cast<Element>(v);
  }
  return std::nullopt;
}

Lattice Lattice::permuted(std::span<const Element> perm) const {
  std::vector<Cover> c;
  c.reserve(covers_.size());
  for (auto [a, b] : covers_) c.emplace_back(perm[a], perm[b]);
  std::vector<std::string> names;
  if (!names_.empty()) {
    names.resize(size_);
    for (Element x = 0; x < size_; ++x) names[perm[x]] = names_[x];
  }
  return from_covers(size_, c, std::move(names));
}

Lattice Lattice::dual() const {
  std::vector<Cover> c;
  for (auto [a, b] : covers_) c.emplace_back(b, a);
  return from_covers(size_, c, names_);
}

std::vector<Element> meet_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Element> join_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

bool is_modular(const Lattice& l) {
  const Element n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (Element x = 0; x < n; ++x)
        if (l.join(a, l.meet(x, b)) != l.meet(l.join(a, x), b)) return false;
    }
  return true;
}

bool is_distributive(const Lattice& l) {
  const Element n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

namespace {

// [lo, hi] is Boolean: the joins of subsets of its atoms are distinct and
// exhaust the interval.
bool interval_is_boolean(const Lattice& l, Element lo, Element hi) {
  std::vector<Element> atoms;
  std::size_t count = 0;
  for (Element z = 0; z < l.size(); ++z) {
    if (!l.leq(lo, z) || !l.leq(z, hi)) continue;
    ++count;
  }
  for (Element a : l.upper_covers(lo))
    if (l.leq(a, hi)) atoms.push_back(a);
  if (atoms.size() >= 20 || count != (std::size_t{1} << atoms.size())) return false;
  std::vector<char> seen(l.size(), 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    Element j = lo;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) j = l.join(j, atoms[i]);
    if (seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

}  // namespace

bool is_lower_locally_distributive(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    const auto& lower = l.lower_covers(x);
    if (lower.empty()) continue;
    Element m = lower.front();
    for (Element y : lower) m = l.meet(m, y);
    if (!interval_is_boolean(l, m, x)) return false;
  }
  return true;
}

bool is_atomistic(const Lattice& l) {
  const auto& atoms = l.upper_covers(l.bottom());
  for (Element x = 0; x < l.size(); ++x) {
    Element j = l.bottom();
    for (Element a : atoms)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  return true;
}

LatticeProfile classify(const Lattice& l) {
  LatticeProfile p;
  p.meet_irreducibles = meet_irreducibles(l);
  p.join_irreducibles = join_irreducibles(l);
  std::set_intersection(p.meet_irreducibles.begin(), p.meet_irreducibles.end(),
                        p.join_irreducibles.begin(), p.join_irreducibles.end(),
                        std::back_inserter(p.double_irreducibles));
  p.is_modular = is_modular(l);
  p.is_distributive = p.is_modular && is_distributive(l);
  p.is_lower_locally_distributive = is_lower_locally_distributive(l);
  p.is_atomistic = is_atomistic(l);
  if (p.is_distributive) {
    const auto& j = p.join_irreducibles;
    std::vector<char> less(j.size() * j.size(), 0);
    for (std::size_t a = 0; a < j.size(); ++a)
      for (std::size_t b = 0; b < j.size(); ++b) less[a * j.size() + b] = l.less(j[a], j[b]);
    p.order_dimension = std::max<std::size_t>(1, poset_width(j.size(), less));
  }
  return p;
}

Lattice induced_lattice(const Lattice& host, std::span<const Element> subset) {
  std::vector<Element> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!std::binary_search(s.begin(), s.end(), host.top()))
    throw NotALattice("subset does not contain the top element");
  for (Element x : s)
    for (Element y : s)
      if (!std::binary_search(s.begin(), s.end(), host.meet(x, y)))
        throw NotALattice("subset is not meet-closed at (" + host.name(x) + ", " +
                          host.name(y) + ")");
  const std::size_t n = s.size();
  std::vector<char> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = host.leq(s[a], s[b]);
  std::vector<std::string> names;
  if (host.has_names())
    for (Element x : s) names.push_back(host.name(x));
  return Lattice::from_order(n, leq, std::move(names));
}

}  // namespace shannon
