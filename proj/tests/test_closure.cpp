#include <doctest.h>

#include "shannon/closure.hpp"
#include "shannon/error.hpp"
#include "shannon/lattice.hpp"

using namespace shannon;

namespace {

Lattice b3() { return catalog("boolean_n", std::vector<int>{3}); }

constexpr Element a = 1, b = 2, ab = 3, c = 4, ac = 5, abc = 7;

RatVector rationals(std::initializer_list<int> num, int den = 1) {
  RatVector v;
  for (int x : num) {
    v.emplace_back(x, den);
    v.back().canonicalize();
  }
  return v;
}

// Two tuples agreeing on every attribute below x also agree below y.
bool table_implies(const Lattice& l, const TupleTable& t, Element x, Element y) {
  for (const auto& r : t.rows)
    for (const auto& s : t.rows) {
      bool agree_x = true, agree_y = true;
      for (Element i = 0; i < l.size(); ++i) {
        if (l.leq(i, x) && r[i] != s[i]) agree_x = false;
        if (l.leq(i, y) && r[i] != s[i]) agree_y = false;
      }
      if (agree_x && !agree_y) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("closure") {
  TEST_CASE("armstrong closure of a single dependency") {
    Lattice l = b3();
    std::vector<Cover> base{{a, c}};
    DependencyRelation closed = armstrong_close(l, DependencyRelation::from_pairs(8, base));
    CHECK(closed.holds(a, ac));
    CHECK(closed.holds(ab, abc));
    CHECK(closed.holds(a, c));
    CHECK_FALSE(closed.holds(c, a));
    CHECK_FALSE(armstrong_violation(l, closed).has_value());
  }

  TEST_CASE("empty base closes to the order") {
    for (const char* name : {"n5", "s7", "lld11"}) {
      Lattice l = catalog(name);
      DependencyRelation closed = armstrong_close(l, DependencyRelation(l.size()));
      CHECK(closed == order_relation(l));
    }
  }

  TEST_CASE("closure is idempotent and extends the base") {
    Lattice l = catalog("lld11");
    std::vector<Cover> base{{1, 2}, {5, 9}};
    DependencyRelation once = armstrong_close(l, DependencyRelation::from_pairs(l.size(), base));
    CHECK(armstrong_close(l, once) == once);
    for (auto [x, y] : base) CHECK(once.holds(x, y));
  }

  TEST_CASE("violations are named") {
    Lattice l = b3();
    DependencyRelation order = order_relation(l);
    CHECK_FALSE(armstrong_violation(l, order).has_value());

    auto v = armstrong_violation(l, DependencyRelation(8));
    REQUIRE(v.has_value());
    CHECK(v->find("reflexivity") != std::string::npos);

    std::vector<Cover> chain_only{{a, c}, {c, b}};
    DependencyRelation r = order;
    for (auto [x, y] : chain_only) r.add(x, y);
    v = armstrong_violation(l, r);
    REQUIRE(v.has_value());
    CHECK((v->find("transitivity") != std::string::npos ||
           v->find("augmentation") != std::string::npos));

    CHECK_THROWS_AS(closed_lattice(l, r), NotClosed);
    CHECK_THROWS_AS(armstrong_close(l, DependencyRelation(3)), BadParams);
  }

  TEST_CASE("functional dependence lattice of three attributes") {
    Lattice l = b3();
    std::vector<Cover> base{{ab, c}, {c, c}};
    DependencyRelation closed = armstrong_close(l, DependencyRelation::from_pairs(8, base));
    ClosedLattice cl = closed_lattice(l, closed);
    CHECK(cl.system.induced.size() == 7);
    CHECK(cl.closure.cl[ab] == abc);
    CHECK(canonical_form(cl.system.induced) == canonical_form(catalog("s7")));
    for (Element x = 0; x < 8; ++x)
      for (Element y = 0; y < 8; ++y)
        CHECK(closed.holds(x, y) == l.leq(cl.closure.cl[y], cl.closure.cl[x]));
  }

  TEST_CASE("order relation gives the identity closure") {
    Lattice l = catalog("n5");
    ClosedLattice cl = closed_lattice(l, order_relation(l));
    for (Element x = 0; x < l.size(); ++x) CHECK(cl.closure.cl[x] == x);
    CHECK(cl.system.induced.order_matrix() == l.order_matrix());
  }

  TEST_CASE("everything implies top") {
    Lattice l = catalog("n5");
    DependencyRelation r = order_relation(l);
    for (Element x = 0; x < l.size(); ++x) r.add(x, l.top());
    ClosedLattice cl = closed_lattice(l, armstrong_close(l, r));
    CHECK(cl.system.induced.size() == 1);
  }

  TEST_CASE("closed lattice of a polymatroid") {
    Lattice l = b3();
    RatVector rank = rationals({0, 1, 1, 2, 1, 2, 2, 3});
    CHECK(closed_lattice_of_polymatroid(l, rank).system.induced.size() == 8);

    // min(|S|, 2) / 2
    RatVector half = rationals({0, 1, 1, 2, 1, 2, 2, 2}, 2);
    ClosedLattice cl = closed_lattice_of_polymatroid(l, half);
    CHECK(canonical_form(cl.system.induced) == canonical_form(catalog("m_n", std::vector<int>{5})));

    RatVector zero(8, 0);
    CHECK(closed_lattice_of_polymatroid(l, zero).system.induced.size() == 1);

    RatVector bad = rationals({0, 2, 1, 1, 1, 2, 2, 3});
    CHECK_THROWS_AS(polymatroid_dependence(l, bad), NotPolymatroid);
  }

  TEST_CASE("three-valued functions close to M_k") {
    Lattice l = catalog("lld11");
    // Values 0, 1/2, 1 only: atoms at 1/2, everything above them at 1.
    RatVector h(11, 1);
    h[0] = 0;
    for (Element q = 1; q <= 4; ++q) h[q] = Rational(1, 2);
    ClosedLattice cl = closed_lattice_of_polymatroid(l, h);
    CHECK(is_modular(cl.system.induced));
    CHECK(cl.system.induced.size() == 6);
  }

  TEST_CASE("closure of a subset") {
    Lattice l = b3();
    std::vector<Element> subset{0, a, b, abc};
    ClosedLattice cl = closure_of_subset(l, subset);
    CHECK(cl.closure.cl[ab] == abc);
    CHECK(cl.closure.cl[c] == abc);
    CHECK(cl.closure.cl[a] == a);
    CHECK(cl.system.closed == subset);
  }

  TEST_CASE("tuple realization") {
    Lattice c2 = catalog("chain_k", std::vector<int>{2});
    TupleRealization t = tuple_realization(c2);
    CHECK(t.table.rows.size() == 2);
    CHECK(t.table.attributes == 2);
    CHECK(t.dependencies.holds(1, 0));
    CHECK_FALSE(t.dependencies.holds(0, 1));

    Lattice n5 = catalog("n5");
    TupleRealization tn = tuple_realization(n5);
    CHECK(tn.table.rows.size() == 5);
    Element x = *n5.find("x"), z = *n5.find("z");
    CHECK_FALSE(tn.dependencies.holds(x, z));
    CHECK_FALSE(table_implies(n5, tn.table, x, z));

    Lattice lld = catalog("lld11");
    TupleRealization tl = tuple_realization(lld);
    CHECK(tl.table.rows.size() == 11);
    std::size_t checked = 0;
    for (Element p = 0; p < 11; ++p)
      for (Element q = 0; q < 11; ++q) {
        CHECK(table_implies(lld, tl.table, p, q) == lld.leq(q, p));
        CHECK(tl.dependencies.holds(p, q) == lld.leq(q, p));
        ++checked;
      }
    CHECK(checked == 121);
  }
}
