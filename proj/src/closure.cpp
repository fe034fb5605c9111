#include "shannon/closure.hpp"

#include <algorithm>
#include <deque>

#include "shannon/cone.hpp"
#include "shannon/error.hpp"

namespace shannon {

namespace {

std::string pair_text(const Lattice& l, Element x, Element y) {
  return "(" + l.name(x) + ", " + l.name(y) + ")";
}

void check_size(const Lattice& l, const DependencyRelation& r) {
  if (r.size() != l.size()) throw BadParams("dependency relation does not match the lattice size");
}

}  // namespace

DependencyRelation DependencyRelation::from_pairs(std::size_t size, std::span<const Cover> pairs) {
  DependencyRelation r(size);
  for (auto [x, y] : pairs) {
    if (x >= size || y >= size) throw BadParams("dependency refers to a missing element");
    r.add(x, y);
  }
  return r;
}

bool DependencyRelation::add(Element x, Element y) {
  char& cell = holds_[x * size_ + y];
  if (cell) return false;
  cell = 1;
  return true;
}

std::vector<Cover> DependencyRelation::pairs() const {
  std::vector<Cover> out;
  for (Element x = 0; x < size_; ++x)
    for (Element y = 0; y < size_; ++y)
      if (holds(x, y)) out.emplace_back(x, y);
  return out;
}

DependencyRelation order_relation(const Lattice& lattice) {
  DependencyRelation r(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y = 0; y < lattice.size(); ++y)
      if (lattice.leq(y, x)) r.add(x, y);
  return r;
}

DependencyRelation armstrong_close(const Lattice& lattice, const DependencyRelation& base) {
  check_size(lattice, base);
  const Element n = static_cast<Element>(lattice.size());
  DependencyRelation r(n);
  std::deque<Cover> work;
  auto push = [&](Element x, Element y) {
    if (r.add(x, y)) work.emplace_back(x, y);
  };
  for (auto [x, y] : base.pairs()) push(x, y);
  for (auto [x, y] : order_relation(lattice).pairs()) push(x, y);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (Element z = 0; z < n; ++z) {
      if (r.holds(y, z)) push(x, z);
      if (r.holds(z, x)) push(z, y);
      push(lattice.join(x, z), lattice.join(y, z));
    }
  }
  return r;
}

std::optional<std::string> armstrong_violation(const Lattice& lattice,
                                               const DependencyRelation& relation) {
  check_size(lattice, relation);
  const Element n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (lattice.leq(y, x) && !relation.holds(x, y))
        return "reflexivity fails at " + pair_text(lattice, x, y);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!relation.holds(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (relation.holds(y, z) && !relation.holds(x, z))
          return "transitivity fails: " + pair_text(lattice, x, y) + " and " +
                 pair_text(lattice, y, z) + " without " + pair_text(lattice, x, z);
        Element a = lattice.join(x, z), b = lattice.join(y, z);
        if (!relation.holds(a, b))
          return "augmentation fails: " + pair_text(lattice, x, y) + " with " + lattice.name(z) +
                 " without " + pair_text(lattice, a, b);
      }
    }
  return std::nullopt;
}

ClosedLattice closed_lattice(const Lattice& lattice, const DependencyRelation& relation) {
  if (auto v = armstrong_violation(lattice, relation)) throw NotClosed(*v);
  const Element n = static_cast<Element>(lattice.size());
  std::vector<Element> cl(n);
  for (Element x = 0; x < n; ++x) {
    Element c = lattice.bottom();
    for (Element y = 0; y < n; ++y)
      if (relation.holds(x, y)) c = lattice.join(c, y);
    cl[x] = c;
  }
  std::vector<Element> closed;
  for (Element x = 0; x < n; ++x)
    if (cl[x] == x) closed.push_back(x);
  std::vector<std::size_t> projection(n);
  for (Element x = 0; x < n; ++x)
    projection[x] = static_cast<std::size_t>(
        std::lower_bound(closed.begin(), closed.end(), cl[x]) - closed.begin());
  Lattice induced = induced_lattice(lattice, closed);
  return ClosedLattice{ClosureOperator{std::move(cl)},
                       ClosureSystem{std::move(closed), std::move(projection), std::move(induced)}};
}

DependencyRelation polymatroid_dependence(const Lattice& lattice, std::span<const Rational> h) {
  if (h.size() != lattice.size()) throw BadParams("function has the wrong number of values");
  auto check = is_polymatroid(lattice, h);
  if (!check.ok) throw NotPolymatroid(check.describe(lattice));
  const Element n = static_cast<Element>(lattice.size());
  DependencyRelation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h[lattice.join(x, y)] == h[x]) r.add(x, y);
  return r;
}

ClosedLattice closed_lattice_of_polymatroid(const Lattice& lattice, std::span<const Rational> h) {
  ClosedLattice out = closed_lattice(lattice, polymatroid_dependence(lattice, h));
  RatVector restricted;
  for (Element x : out.system.closed) restricted.push_back(h[x]);
  auto check = is_polymatroid(out.system.induced, restricted);
  if (!check.ok)
    throw NotPolymatroid("restriction to the closed elements: " +
                         check.describe(out.system.induced));
  return out;
}

ClosedLattice closure_of_subset(const Lattice& lattice, std::span<const Element> subset) {
  Lattice induced = induced_lattice(lattice, subset);
  std::vector<Element> closed(subset.begin(), subset.end());
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  const Element n = static_cast<Element>(lattice.size());
  std::vector<Element> cl(n);
  std::vector<std::size_t> projection(n);
  for (Element x = 0; x < n; ++x) {
    Element c = lattice.top();
    for (Element s : closed)
      if (lattice.leq(x, s)) c = lattice.meet(c, s);
    cl[x] = c;
    projection[x] = static_cast<std::size_t>(
        std::lower_bound(closed.begin(), closed.end(), c) - closed.begin());
  }
  return ClosedLattice{ClosureOperator{std::move(cl)},
                       ClosureSystem{std::move(closed), std::move(projection), std::move(induced)}};
}

DependencyRelation table_dependencies(const Lattice& lattice, const TupleTable& table) {
  const Element n = static_cast<Element>(lattice.size());
  if (table.attributes != n) throw BadParams("table needs one attribute per element");
  auto agree_below = [&](const std::vector<char>& s, const std::vector<char>& t, Element a) {
    for (Element i = 0; i < n; ++i)
      if (lattice.leq(i, a) && s[i] != t[i]) return false;
    return true;
  };
  DependencyRelation r(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bool holds = true;
      for (std::size_t s = 0; s < table.rows.size() && holds; ++s)
        for (std::size_t t = s + 1; t < table.rows.size() && holds; ++t)
          if (agree_below(table.rows[s], table.rows[t], a) &&
              !agree_below(table.rows[s], table.rows[t], b))
            holds = false;
      if (holds) r.add(a, b);
    }
  return r;
}

TupleRealization tuple_realization(const Lattice& lattice) {
  const Element n = static_cast<Element>(lattice.size());
  TupleRealization out;
  out.table.attributes = n;
  out.table.rows.assign(n, std::vector<char>(n, 0));
  for (Element t = 0; t < n; ++t)
    for (Element i = 0; i < n; ++i) out.table.rows[t][i] = lattice.leq(i, t);
  out.dependencies = table_dependencies(lattice, out.table);
  if (!(out.dependencies == order_relation(lattice)))
    throw std::logic_error("tuple table does not reproduce the lattice order");
  return out;
}

}  // namespace shannon
