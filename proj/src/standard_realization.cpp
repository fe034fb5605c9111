#include <algorithm>
#include <array>
#include <map>

#include "shannon/closure.hpp"
#include "shannon/error.hpp"
#include "shannon/poset.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::mn: return "mn";
    case Scheme::grid: return "grid";
    case Scheme::zero_one: return "zero_one";
    case Scheme::half_valued: return "half_valued";
  }
  return "?";
}

namespace {

std::vector<Element> middles_of_mk(const Lattice& l) {
  std::vector<Element> middles;
  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom() || x == l.top()) continue;
    if (l.lower_covers(x) != std::vector<Element>{l.bottom()} ||
        l.upper_covers(x) != std::vector<Element>{l.top()})
      throw ShapeMismatch("lattice is not of the form M_k");
    middles.push_back(x);
  }
  return middles;
}

GroupRealization mn_realization(const Lattice& l, std::optional<std::uint32_t> p_opt) {
  if (l.size() < 2) throw ShapeMismatch("M_k needs distinct bottom and top");
  auto middles = middles_of_mk(l);
  std::uint32_t p = p_opt ? *p_opt : gf::next_prime_above(static_cast<std::uint32_t>(middles.size()));
  if (!gf::is_prime(p)) throw BadParams(std::to_string(p) + " is not prime");
  if (p <= middles.size())
    throw ShapeMismatch("Z_" + std::to_string(p) + " has too few lines for " +
                        std::to_string(middles.size()) + " middle elements");
  GroupRealization r{p, 2, std::vector<gf::Subspace>(l.size(), gf::Subspace(p, 2))};
  r.subgroup[l.bottom()] = gf::Subspace::whole(p, 2);
  std::uint32_t j = 0;
  for (Element m : middles) {
    ++j;
    r.subgroup[m] = gf::Subspace::span(p, 2, {{p - j, 1}});
  }
  return r;
}

GroupRealization grid_realization(const Lattice& l, std::optional<std::uint32_t> p_opt) {
  const Element n = static_cast<Element>(l.size());
  auto is_double = [&](Element m) {
    return l.lower_covers(m).size() == 1 && l.upper_covers(m).size() == 1;
  };
  // doubles grouped by the interval [a, c] they sit in
  std::map<std::pair<Element, Element>, std::vector<Element>> extra;
  std::vector<char> removed(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      if (!l.less(a, c)) continue;
      std::vector<Element> mids, doubles;
      for (Element m : l.upper_covers(a)) {
        const auto& up = l.upper_covers(m);
        if (std::find(up.begin(), up.end(), c) != up.end()) mids.push_back(m);
      }
      if (mids.size() < 3) continue;
      std::vector<Element> keep;
      for (Element m : mids) (is_double(m) ? doubles : keep).push_back(m);
      if (keep.size() > 2) throw ShapeMismatch("interval with more than two non-doubles");
      while (keep.size() < 2) {
        keep.push_back(doubles.front());
        doubles.erase(doubles.begin());
      }
      for (Element d : doubles) removed[d] = 1;
      extra[{a, c}] = doubles;
    }

  std::vector<Element> skeleton;
  for (Element x = 0; x < n; ++x)
    if (!removed[x]) skeleton.push_back(x);
  std::vector<char> leq(skeleton.size() * skeleton.size(), 0);
  for (std::size_t i = 0; i < skeleton.size(); ++i)
    for (std::size_t j = 0; j < skeleton.size(); ++j)
      leq[i * skeleton.size() + j] = l.leq(skeleton[i], skeleton[j]);
  std::optional<Lattice> s;
  try {
    s = Lattice::from_order(skeleton.size(), leq);
  } catch (const Error&) {
    throw ShapeMismatch("removing the doubles does not leave a lattice");
  }
  if (!is_distributive(*s)) throw ShapeMismatch("skeleton is not distributive");
  auto js = join_irreducibles(*s);
  std::vector<char> less(js.size() * js.size(), 0);
  for (std::size_t i = 0; i < js.size(); ++i)
    for (std::size_t j = 0; j < js.size(); ++j) less[i * js.size() + j] = s->less(js[i], js[j]);
  auto chains = minimum_chain_cover(js.size(), less);
  if (chains.size() > 2) throw ShapeMismatch("skeleton has order dimension above 2");
  chains.resize(2);

  const std::uint32_t k = static_cast<std::uint32_t>(js.size());
  std::size_t most = 1;
  for (const auto& [_, d] : extra) most = std::max(most, d.size());
  std::uint32_t p = p_opt ? *p_opt : gf::next_prime_above(static_cast<std::uint32_t>(most));
  if (!gf::is_prime(p)) throw BadParams(std::to_string(p) + " is not prime");
  if (p <= most) throw ShapeMismatch("prime too small for the doubles in one interval");

  // coordinate of a skeleton element: how far up each chain it reaches
  auto coords = [&](Element x) {
    std::size_t sx = std::lower_bound(skeleton.begin(), skeleton.end(), x) - skeleton.begin();
    std::array<std::size_t, 2> c{0, 0};
    for (int t = 0; t < 2; ++t)
      for (std::size_t idx : chains[t])
        if (s->leq(js[idx], static_cast<Element>(sx))) ++c[t];
    return c;
  };
  const std::size_t first = chains[0].size();
  auto unit = [&](std::size_t pos) {
    gf::Vec e(k, 0);
    e[pos] = 1;
    return e;
  };
  auto space = [&](std::array<std::size_t, 2> c) {
    std::vector<gf::Vec> v;
    for (std::size_t t = 0; t < c[0]; ++t) v.push_back(unit(t));
    for (std::size_t t = 0; t < c[1]; ++t) v.push_back(unit(first + t));
    return gf::Subspace::span(p, k, std::move(v));
  };

  std::vector<gf::Subspace> functional(n, gf::Subspace(p, k));
  for (Element x : skeleton) functional[x] = space(coords(x));
  for (const auto& [ac, doubles] : extra) {
    auto ca = coords(ac.first), cc = coords(ac.second);
    if (cc[0] != ca[0] + 1 || cc[1] != ca[1] + 1)
      throw ShapeMismatch("doubles sit in an interval that is not a grid square");
    std::uint32_t t = 0;
    for (Element d : doubles) {
      ++t;
      gf::Vec v(k, 0);
      v[ca[0]] = 1;
      v[first + ca[1]] = t;
      functional[d] = functional[ac.first].sum(gf::Subspace::span(p, k, {v}));
    }
  }
  GroupRealization r{p, k, {}};
  for (Element x = 0; x < n; ++x) r.subgroup.push_back(functional[x].annihilator());
  try {
    entropy_from_groups(l, r);
  } catch (const InvalidAssignment& e) {
    throw ShapeMismatch(std::string("grid construction does not fit: ") + e.what());
  }
  return r;
}

// Realizes h through its lattice of closed elements; `levels` is the
// number of nonzero value levels allowed (1 for zero_one, 2 for half_valued).
GroupRealization through_closure(const Lattice& l, const RealizationParams& params, int levels) {
  const RatVector& h = params.target;
  if (h.size() != l.size()) throw ShapeMismatch("target has the wrong length");
  const Rational top = h[l.top()];
  for (const auto& v : h) {
    Rational q = top == 0 ? Rational(v == 0 ? 0 : 1) : Rational(v * levels / top);
    q.canonicalize();
    if (q.get_den() != 1 || q < 0 || q > levels)
      throw ShapeMismatch("target values are not multiples of h(top)/" + std::to_string(levels));
  }
  std::optional<ClosedLattice> closed;
  try {
    closed.emplace(closed_lattice_of_polymatroid(l, h));
  } catch (const NotPolymatroid& e) {
    throw ShapeMismatch(std::string("target is not a polymatroid: ") + e.what());
  }
  const Lattice& c = closed->system.induced;
  GroupRealization inner;
  if (c.size() == 1) {
    inner = GroupRealization{2, 0, {gf::Subspace::whole(2, 0)}};
  } else if (levels == 1) {
    if (c.size() != 2) throw ShapeMismatch("closed lattice of a 0/1 function is not a 2-chain");
    inner = GroupRealization{2, 1, std::vector<gf::Subspace>(2, gf::Subspace(2, 1))};
    inner.subgroup[c.bottom()] = gf::Subspace::whole(2, 1);
  } else {
    inner = mn_realization(c, params.p);
  }
  GroupRealization r = pull_back(l, closed->system.projection, inner);
  EntropyVector e = entropy_from_groups(l, r);
  const std::uint32_t width = levels == 1 ? 1 : 2;
  for (Element x = 0; x < l.size(); ++x)
    if (top != 0 && e.exact[x] * top != h[x] * width)
      throw ShapeMismatch("closed-lattice realization does not reproduce the target");
  return r;
}

}  // namespace

GroupRealization standard_realization(const Lattice& lattice, Scheme scheme,
                                      const RealizationParams& params) {
  switch (scheme) {
    case Scheme::mn: return mn_realization(lattice, params.p);
    case Scheme::grid: return grid_realization(lattice, params.p);
    case Scheme::zero_one: return through_closure(lattice, params, 1);
    case Scheme::half_valued: return through_closure(lattice, params, 2);
  }
  throw BadParams("unknown scheme");
}

}  // namespace shannon
