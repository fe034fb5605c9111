#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "shannon/inequalities.hpp"

namespace shannon {

namespace {

class Auditor {
 public:
  Auditor(const Lattice& l, const IndependenceRelation& r)
      : l_(l), r_(r), n_(static_cast<Element>(l.size())) {}

  AxiomAudit run() {
    AxiomAudit a;
    a.semi_graphoid = {existence(), symmetry(), decomposition(), contraction(), weak_union()};
    a.derived = {reflexivity(), normality(),    monotonicity(), triviality(),
                 base_monotonicity(), transitivity(), autonomy()};
    a.flags = {strong_union(), strong_contraction()};
    return a;
  }

 private:
  bool R(Element x, Element y, Element z) const { return r_.holds(x, y, z); }
  Element J(Element x, Element y) const { return l_.join(x, y); }
  bool leq(Element x, Element y) const { return l_.leq(x, y); }

  static AxiomResult named(std::string name) {
    AxiomResult r;
    r.name = std::move(name);
    return r;
  }

  static void fail(AxiomResult& res, std::vector<Element> witness) {
    if (res.passed) res.witness = std::move(witness);
    res.passed = false;
    ++res.failures;
  }

  AxiomResult existence() const {
    AxiomResult res = named("existence");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (!R(x, y, x)) fail(res, {x, y});
    return res;
  }

  AxiomResult symmetry() const {
    AxiomResult res = named("symmetry");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element w = 0; w < n_; ++w)
          if (R(x, y, w) && !R(y, x, w)) fail(res, {x, y, w});
    return res;
  }

  AxiomResult decomposition() const {
    AxiomResult res = named("decomposition");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z) {
          Element yz = J(y, z);
          for (Element w = 0; w < n_; ++w)
            if (R(x, yz, w) && !R(x, z, w)) fail(res, {x, y, z, w});
        }
    return res;
  }

  AxiomResult contraction() const {
    AxiomResult res = named("contraction");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z)
          for (Element w = 0; w < n_; ++w)
            if (R(x, z, w) && R(x, y, J(z, w)) && !R(x, J(y, z), w)) fail(res, {x, y, z, w});
    return res;
  }

  AxiomResult weak_union() const {
    AxiomResult res = named("weak_union");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z)
          for (Element w = 0; w < n_; ++w)
            if (R(x, J(y, z), w) && !R(x, y, J(z, w))) fail(res, {x, y, z, w});
    return res;
  }

  AxiomResult reflexivity() const {
    AxiomResult res = named("reflexivity");
    for (Element x = 0; x < n_; ++x)
      if (!R(x, x, x)) fail(res, {x});
    return res;
  }

  AxiomResult normality() const {
    AxiomResult res = named("normality");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element w = 0; w < n_; ++w)
          if (R(x, y, w) && !R(x, J(y, w), w)) fail(res, {x, y, w});
    return res;
  }

  AxiomResult monotonicity() const {
    AxiomResult res = named("monotonicity");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element w = 0; w < n_; ++w) {
          if (!R(x, y, w)) continue;
          Element yw = J(y, w);
          for (Element z = 0; z < n_; ++z)
            if (leq(z, yw) && !R(x, z, w)) fail(res, {x, y, z, w});
        }
    return res;
  }

  AxiomResult triviality() const {
    AxiomResult res = named("triviality");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (!R(x, l_.bottom(), y)) fail(res, {x, y});
    return res;
  }

  AxiomResult base_monotonicity() const {
    AxiomResult res = named("base_monotonicity");
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element d = 0; d < n_; ++d) {
          if (!leq(d, b) || !R(a, b, d)) continue;
          for (Element c = 0; c < n_; ++c)
            if (leq(d, c) && leq(c, b) && !R(a, b, c)) fail(res, {a, b, c, d});
        }
    return res;
  }

  AxiomResult transitivity() const {
    AxiomResult res = named("transitivity");
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c) {
          if (!leq(c, b) || !R(a, b, c)) continue;
          for (Element d = 0; d < n_; ++d)
            if (leq(d, c) && R(a, c, d) && !R(a, b, d)) fail(res, {a, b, c, d});
        }
    return res;
  }

  AxiomResult autonomy() const {
    AxiomResult res = named("autonomy");
    for (Element a = 0; a < n_; ++a)
      for (Element c = 0; c < n_; ++c) {
        if (!R(a, a, c)) continue;
        for (Element b = 0; b < n_; ++b)
          if (!R(a, b, c)) fail(res, {a, b, c});
      }
    return res;
  }

  AxiomResult strong_union() const {
    AxiomResult res = named("strong_union");
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z) {
          if (!R(x, y, z)) continue;
          for (Element w = 0; w < n_; ++w)
            if (!R(x, y, J(z, w))) fail(res, {x, y, z, w});
        }
    return res;
  }

  // (X,Y | Z v V), (X,Y | Z v W), (V,W | Z) imply (X,Y | Z). One bitset per
  // conditioning element over the (X, Y) pairs keeps this at n^3 word scans.
  AxiomResult strong_contraction() const {
    AxiomResult res = named("strong_contraction");
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    std::vector<boost::dynamic_bitset<>> plane(n_, boost::dynamic_bitset<>(nn));
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z)
          if (R(x, y, z)) plane[z].set(static_cast<std::size_t>(x) * n_ + y);
    for (Element z = 0; z < n_; ++z)
      for (Element v = 0; v < n_; ++v)
        for (Element w = 0; w < n_; ++w) {
          if (!R(v, w, z)) continue;
          boost::dynamic_bitset<> bad = plane[J(z, v)] & plane[J(z, w)];
          bad -= plane[z];
          std::size_t k = bad.count();
          if (k == 0) continue;
          std::size_t first = bad.find_first();
          Element x = static_cast<Element>(first / n_), y = static_cast<Element>(first % n_);
          if (res.passed) res.witness = {x, y, z, v, w};
          res.passed = false;
          res.failures += k;
        }
    return res;
  }

  const Lattice& l_;
  const IndependenceRelation& r_;
  Element n_;
};

}  // namespace

bool AxiomAudit::semi_graphoid_ok() const {
  for (const auto& r : semi_graphoid)
    if (!r.passed) return false;
  return true;
}

bool AxiomAudit::derived_ok() const {
  for (const auto& r : derived)
    if (!r.passed) return false;
  return true;
}

const AxiomResult* AxiomAudit::find(const std::string& name) const {
  for (const auto* group : {&semi_graphoid, &derived, &flags})
    for (const auto& r : *group)
      if (r.name == name) return &r;
  return nullptr;
}

AxiomAudit audit_axioms(const Lattice& lattice, const IndependenceRelation& relation) {
  if (relation.size() != lattice.size())
    throw std::invalid_argument("relation does not match the lattice size");
  return Auditor(lattice, relation).run();
}

}  // namespace shannon
