#include "shannon/cone.hpp"
#include "shannon/error.hpp"

namespace shannon {

namespace {

// Shared by the exact and tolerance-based checks; lt is the strict order.
template <class View, class Less>
PolymatroidCheck check(const Lattice& l, View h, Less lt) {
  PolymatroidCheck out;
  auto fail = [&](RowKind k, Element x, Element y) {
    out.ok = false;
    out.kind = k;
    out.x = x;
    out.y = y;
    return out;
  };
  if (lt(h(l.bottom()), 0.0) || lt(0.0, h(l.bottom())))
    return fail(RowKind::ground, l.bottom(), l.bottom());
  for (auto [lo, hi] : l.covers())
    if (lt(h(hi), h(lo))) return fail(RowKind::monotone, lo, hi);
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      if (l.comparable(x, y)) continue;
      if (lt(h(x) + h(y), h(l.join(x, y)) + h(l.meet(x, y))))
        return fail(RowKind::submodular, x, y);
    }
  return out;
}

void check_length(const Lattice& l, std::size_t n) {
  if (n != l.size()) throw BadParams("function has the wrong number of values");
}

}  // namespace

std::string PolymatroidCheck::describe(const Lattice& lattice) const {
  if (ok) return "polymatroid";
  switch (kind) {
    case RowKind::ground: return "ground: h(" + lattice.name(x) + ") is not zero";
    case RowKind::monotone:
      return "monotone(" + lattice.name(x) + ", " + lattice.name(y) + ")";
    case RowKind::submodular:
      return "submodular(" + lattice.name(x) + ", " + lattice.name(y) + ")";
  }
  return "?";
}

PolymatroidCheck is_polymatroid(const Lattice& lattice, std::span<const Rational> values) {
  check_length(lattice, values.size());
  return check(
      lattice, [&](Element e) -> Rational { return values[e]; },
      [](const Rational& a, const Rational& b) { return a < b; });
}

PolymatroidCheck is_polymatroid(const Lattice& lattice, std::span<const Integer> values) {
  check_length(lattice, values.size());
  return check(
      lattice, [&](Element e) -> Integer { return values[e]; },
      [](const Integer& a, const Integer& b) { return a < b; });
}

PolymatroidCheck is_polymatroid_approx(const Lattice& lattice, std::span<const double> values,
                                       double tolerance) {
  check_length(lattice, values.size());
  return check(
      lattice, [&](Element e) { return values[e]; },
      [tolerance](double a, double b) { return a < b - tolerance; });
}

Integer evaluate(const ConstraintRow& row, std::span<const Integer> v) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.coeffs.size(); ++i)
    if (row.coeffs[i] != 0) s += row.coeffs[i] * v[i];
  return s;
}

RatVector normalized(const Lattice& lattice, std::span<const Integer> ray) {
  RatVector out = to_rational(ray);
  const Integer& t = ray[lattice.top()];
  if (t == 0) return out;
  for (auto& q : out) {
    q /= t;
    q.canonicalize();
  }
  return out;
}

}  // namespace shannon
