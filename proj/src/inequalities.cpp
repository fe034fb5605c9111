#include "shannon/inequalities.hpp"

#include <limits>

#include "shannon/error.hpp"

namespace shannon {

std::string to_string(Template t) {
  switch (t) {
    case Template::zhang_yeung: return "zhang_yeung";
    case Template::ingleton: return "ingleton";
    case Template::strong_union: return "strong_union";
  }
  return "?";
}

Template parse_template(const std::string& text) {
  if (text == "zhang_yeung" || text == "zy" || text == "zhang-yeung") return Template::zhang_yeung;
  if (text == "ingleton") return Template::ingleton;
  if (text == "strong_union" || text == "strong-union") return Template::strong_union;
  throw BadParams("unknown inequality template '" + text + "'");
}

std::size_t arity(Template t) {
  switch (t) {
    case Template::zhang_yeung: return 4;
    case Template::ingleton: return 5;
    case Template::strong_union: return 4;
  }
  return 0;
}

namespace {

template <class T>
struct Evaluator {
  const Lattice& l;
  const std::vector<T>& h;

  T mi(Element x, Element y, Element z) const {
    return h[l.join(x, z)] + h[l.join(y, z)] - h[l.join(x, y, z)] - h[z];
  }

  T gap(Template t, const Element* a) const {
    const Element bot = l.bottom();
    switch (t) {
      case Template::zhang_yeung: {
        Element A = a[0], B = a[1], C = a[2], D = a[3];
        return mi(A, B, bot) + mi(A, l.join(C, D), bot) + 3 * mi(C, D, A) + mi(C, D, B) -
               2 * mi(C, D, bot);
      }
      case Template::ingleton: {
        Element X = a[0], Y = a[1], Z = a[2], V = a[3], W = a[4];
        return mi(X, Y, l.join(Z, V)) + mi(X, Y, l.join(Z, W)) + mi(V, W, Z) - mi(X, Y, Z);
      }
      case Template::strong_union: {
        Element X = a[0], Y = a[1], Z = a[2], W = a[3];
        return mi(X, Y, l.join(Z, W)) - mi(X, Y, Z);
      }
    }
    return T(0);
  }
};

void check_values(const Lattice& l, std::span<const Rational> h) {
  if (h.size() != l.size()) throw BadParams("function has the wrong number of values");
}

std::uint64_t assignment_count(std::size_t n, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / std::max<std::size_t>(n, 1) + 1) return budget + 1;
    total *= n;
  }
  return total;
}

// Visits every assignment in lexicographic order until visit returns false.
template <class Visit>
void for_each_assignment(std::size_t n, std::size_t k, Visit visit) {
  std::vector<Element> a(k, 0);
  while (true) {
    if (!visit(a.data())) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++a[i] < n) break;
      a[i] = 0;
      if (i == 0) return;
    }
  }
}

// Integer copy of h scaled by the common denominator, when it fits comfortably.
bool scaled_integers(std::span<const Rational> h, std::vector<std::int64_t>& out, Integer& scale) {
  scale = 1;
  for (const auto& q : h) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
  const Integer limit = Integer(1) << 40;
  out.clear();
  for (const auto& q : h) {
    Integer v = q.get_num() * (scale / q.get_den());
    if (abs(v) >= limit || abs(scale) >= limit) return false;
    out.push_back(v.get_si());
  }
  return true;
}

template <class OnGap>
void scan(const Lattice& l, std::span<const Rational> h, Template t, const ScanOptions& options,
          OnGap on_gap) {
  check_values(l, h);
  const std::size_t k = arity(t);
  if (assignment_count(l.size(), k, options.budget) > options.budget)
    throw BudgetExceeded("scan of " + to_string(t) + " needs " + std::to_string(l.size()) + "^" +
                         std::to_string(k) + " assignments, over the budget of " +
                         std::to_string(options.budget));
  std::vector<std::int64_t> hi;
  Integer scale;
  if (scaled_integers(h, hi, scale)) {
    Evaluator<std::int64_t> ev{l, hi};
    for_each_assignment(l.size(), k, [&](const Element* a) {
      std::int64_t g = ev.gap(t, a);
      return on_gap(a, g, [&] { return Rational(Integer(static_cast<long>(g)), scale); });
    });
  } else {
    std::vector<Rational> hr(h.begin(), h.end());
    Evaluator<Rational> ev{l, hr};
    for_each_assignment(l.size(), k, [&](const Element* a) {
      Rational g = ev.gap(t, a);
      return on_gap(a, sgn(g), [&] { return g; });
    });
  }
}

GapReport report(Template t, const Element* a, Rational gap) {
  gap.canonicalize();
  GapReport r;
  r.tmpl = t;
  r.assignment.assign(a, a + arity(t));
  r.violated = gap < 0;
  r.gap = std::move(gap);
  return r;
}

}  // namespace

Rational conditional_mi(const Lattice& lattice, std::span<const Rational> h, Element x,
                        Element y, Element z) {
  check_values(lattice, h);
  std::vector<Rational> v(h.begin(), h.end());
  return Evaluator<Rational>{lattice, v}.mi(x, y, z);
}

GapReport inequality_gap(const Lattice& lattice, std::span<const Rational> h, Template t,
                         std::span<const Element> assignment) {
  check_values(lattice, h);
  if (assignment.size() != arity(t))
    throw ArityMismatch(to_string(t) + " takes " + std::to_string(arity(t)) + " elements, got " +
                        std::to_string(assignment.size()));
  for (Element e : assignment)
    if (e >= lattice.size()) throw BadParams("assignment refers to a missing element");
  std::vector<Rational> v(h.begin(), h.end());
  return report(t, assignment.data(), Evaluator<Rational>{lattice, v}.gap(t, assignment.data()));
}

std::vector<GapReport> scan_quadruples(const Lattice& lattice, std::span<const Rational> h,
                                       Template t, const ScanOptions& options) {
  std::vector<GapReport> out;
  scan(lattice, h, t, options, [&](const Element* a, auto g, auto exact) {
    if (g < 0) {
      out.push_back(report(t, a, exact()));
      if (options.first_only) return false;
    }
    return true;
  });
  return out;
}

GapReport minimum_gap(const Lattice& lattice, std::span<const Rational> h, Template t,
                      const ScanOptions& options) {
  std::vector<Element> best;
  Rational best_gap;
  bool have = false;
  scan(lattice, h, t, options, [&](const Element* a, auto, auto exact) {
    Rational g = exact();
    if (!have || g < best_gap) {
      best.assign(a, a + arity(t));
      best_gap = g;
      have = true;
    }
    return true;
  });
  return report(t, best.data(), best_gap);
}

std::size_t IndependenceRelation::count() const {
  std::size_t c = 0;
  for (char v : holds_) c += v != 0;
  return c;
}

IndependenceRelation induced_relation(const Lattice& lattice, std::span<const Rational> h) {
  check_values(lattice, h);
  const Element n = static_cast<Element>(lattice.size());
  std::vector<Rational> v(h.begin(), h.end());
  Evaluator<Rational> ev{lattice, v};
  IndependenceRelation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (ev.mi(x, y, z) == 0) r.set(x, y, z);
  return r;
}

}  // namespace shannon
