#include <algorithm>

#include "shannon/cone.hpp"
#include "shannon/error.hpp"

namespace shannon {

std::string to_string(RowKind kind) {
  switch (kind) {
    case RowKind::ground: return "ground";
    case RowKind::monotone: return "monotone";
    case RowKind::submodular: return "submodular";
  }
  return "?";
}

std::string to_string(ConstraintMode mode) {
  return mode == ConstraintMode::full ? "full" : "reduced";
}

ConstraintMode parse_mode(const std::string& text) {
  if (text == "full") return ConstraintMode::full;
  if (text == "reduced") return ConstraintMode::reduced;
  throw BadParams("unknown constraint mode '" + text + "'");
}

namespace {

ConstraintRow monotone_row(std::size_t n, Element lower, Element upper) {
  ConstraintRow r{std::vector<int>(n, 0), RowKind::monotone, lower, upper};
  r.coeffs[upper] += 1;
  r.coeffs[lower] -= 1;
  return r;
}

ConstraintRow submodular_row(const Lattice& l, Element x, Element y) {
  ConstraintRow r{std::vector<int>(l.size(), 0), RowKind::submodular, x, y};
  r.coeffs[x] += 1;
  r.coeffs[y] += 1;
  r.coeffs[l.join(x, y)] -= 1;
  r.coeffs[l.meet(x, y)] -= 1;
  return r;
}

}  // namespace

ConstraintSystem build_constraints(const Lattice& lattice, ConstraintMode mode) {
  const std::size_t n = lattice.size();
  ConstraintSystem sys;
  sys.dimension = n;
  sys.mode = mode;
  ConstraintRow ground{std::vector<int>(n, 0), RowKind::ground, lattice.bottom(), lattice.bottom()};
  ground.coeffs[lattice.bottom()] = 1;
  sys.equalities.push_back(std::move(ground));

  if (mode == ConstraintMode::full) {
    for (auto [lo, hi] : lattice.covers()) sys.inequalities.push_back(monotone_row(n, lo, hi));
  } else {
    for (Element x : meet_irreducibles(lattice))
      sys.inequalities.push_back(monotone_row(n, x, lattice.upper_covers(x).front()));
  }

  const bool only_covering = mode == ConstraintMode::reduced && is_modular(lattice);
  auto covers = [&](Element a, Element b) {
    const auto& up = lattice.upper_covers(a);
    return std::find(up.begin(), up.end(), b) != up.end();
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (lattice.comparable(x, y)) continue;
      Element m = lattice.meet(x, y);
      if (only_covering && !(covers(m, x) && covers(m, y))) continue;
      sys.inequalities.push_back(submodular_row(lattice, x, y));
    }
  return sys;
}

}  // namespace shannon
