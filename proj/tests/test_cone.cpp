#include <doctest.h>

#include <algorithm>
#include <bit>

#include "oracles.hpp"
#include "shannon/cone.hpp"
#include "shannon/error.hpp"
#include "shannon/lattice.hpp"

using namespace shannon;

namespace {

std::size_t count(const ConstraintSystem& s, RowKind kind) {
  return static_cast<std::size_t>(std::count_if(s.inequalities.begin(), s.inequalities.end(),
                                                [&](const auto& r) { return r.kind == kind; }));
}

IntVector ints(std::initializer_list<long> values) {
  IntVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector fig2_values() {
  RatVector h{Rational(0)};
  for (int i = 0; i < 4; ++i) h.emplace_back(1, 2);
  for (int i = 0; i < 5; ++i) h.emplace_back(3, 4);
  h.emplace_back(1);
  return h;
}

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("constraint counts") {
    ConstraintSystem c2 =
        build_constraints(catalog("chain_k", std::vector<int>{2}), ConstraintMode::full);
    CHECK(c2.equalities.size() == 1);
    CHECK(c2.inequalities.size() == 1);
    CHECK(count(c2, RowKind::submodular) == 0);

    ConstraintSystem m7 =
        build_constraints(catalog("m_n", std::vector<int>{7}), ConstraintMode::reduced);
    CHECK(m7.equalities.size() == 1);
    CHECK(count(m7, RowKind::monotone) == 5);
    CHECK(count(m7, RowKind::submodular) == 10);
    for (const auto& row : m7.inequalities)
      if (row.kind == RowKind::monotone) CHECK(row.y == 6);

    ConstraintSystem b3 =
        build_constraints(catalog("boolean_n", std::vector<int>{3}), ConstraintMode::full);
    CHECK(b3.equalities.size() == 1);
    CHECK(count(b3, RowKind::monotone) == 12);
    CHECK(count(b3, RowKind::submodular) == 9);
  }

  TEST_CASE("chain rays") {
    ConstraintSystem s =
        build_constraints(catalog("chain_k", std::vector<int>{2}), ConstraintMode::full);
    RaySet dd = extreme_rays(s);
    REQUIRE(dd.rays.size() == 1);
    CHECK(dd.rays[0] == ints({0, 1}));
    CHECK(brute_force_rays(s).rays == dd.rays);
  }

  TEST_CASE("lld11 ray is extreme") {
    Lattice l = catalog("lld11");
    IntVector witness = ints({0, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4});
    CHECK(oracle::is_extreme(l, witness));
    for (ConstraintMode mode : {ConstraintMode::full, ConstraintMode::reduced}) {
      RaySet rays = extreme_rays(build_constraints(l, mode));
      CHECK(std::find(rays.rays.begin(), rays.rays.end(), witness) != rays.rays.end());
      for (const auto& r : rays.rays) CHECK(oracle::is_extreme(l, r));
    }
  }

  TEST_CASE("rays are primitive and sorted") {
    RaySet rays = extreme_rays(build_constraints(catalog("s7"), ConstraintMode::full));
    CHECK(std::is_sorted(rays.rays.begin(), rays.rays.end()));
    for (const auto& r : rays.rays) {
      Integer g = 0;
      for (const auto& v : r) g = gcd(g, v);
      CHECK(g == 1);
    }
  }

  TEST_CASE("oracle agreement on small catalog lattices") {
    for (const char* name : {"n5", "s7"}) {
      ConstraintSystem s = build_constraints(catalog(name), ConstraintMode::full);
      CHECK(brute_force_rays(s).rays == extreme_rays(s).rays);
    }
    ConstraintSystem m5 =
        build_constraints(catalog("m_n", std::vector<int>{5}), ConstraintMode::reduced);
    CHECK(brute_force_rays(m5).rays == extreme_rays(m5).rays);
  }

  TEST_CASE("every ray of the defining system is found") {
    // Rays confirmed extreme by the rank oracle, counted independently.
    Lattice n5 = catalog("n5");
    RaySet rays = extreme_rays(build_constraints(n5, ConstraintMode::full));
    for (const auto& r : rays.rays) CHECK(oracle::is_polymatroid(n5, to_rational(r)));
    CHECK(rays.rays.size() == brute_force_rays(build_constraints(n5, ConstraintMode::full)).rays.size());
  }

  TEST_CASE("threads give the same ray set") {
    ConstraintSystem s =
        build_constraints(catalog("boolean_n", std::vector<int>{3}), ConstraintMode::full);
    DDOptions two;
    two.threads = 2;
    CHECK(extreme_rays(s, two).rays == extreme_rays(s).rays);
  }

  TEST_CASE("cone errors") {
    ConstraintSystem s = build_constraints(catalog("lld11"), ConstraintMode::full);
    DDOptions tight;
    tight.max_rays = 3;
    CHECK_THROWS_AS(extreme_rays(s, tight), BudgetExceeded);

    ConstraintSystem degenerate;
    degenerate.dimension = 3;
    degenerate.equalities.push_back({{1, 0, 0}, RowKind::ground, 0, 0});
    CHECK_THROWS_AS(extreme_rays(degenerate), DegenerateCone);

    ConstraintSystem big =
        build_constraints(catalog("chain_k", std::vector<int>{13}), ConstraintMode::full);
    CHECK_THROWS_AS(brute_force_rays(big), DimensionTooLarge);
  }

  TEST_CASE("polymatroid predicate") {
    Lattice l = catalog("lld11");
    CHECK(is_polymatroid(l, fig2_values()).ok);
    CHECK(oracle::is_polymatroid(l, fig2_values()));

    Lattice c3 = catalog("chain_k", std::vector<int>{3});
    RatVector inverted{Rational(0), Rational(1), Rational(0)};
    PolymatroidCheck check = is_polymatroid(c3, inverted);
    CHECK_FALSE(check.ok);
    CHECK(check.kind == RowKind::monotone);
    CHECK(check.x == 1);
    CHECK(check.y == 2);
    CHECK(check.describe(c3).rfind("monotone(", 0) == 0);

    Lattice b4 = catalog("boolean_n", std::vector<int>{4});
    RatVector rank;
    for (Element s = 0; s < 16; ++s) rank.emplace_back(std::popcount(s));
    CHECK(is_polymatroid(b4, rank).ok);

    RatVector shifted = rank;
    shifted[0] = 1;
    CHECK(is_polymatroid(b4, shifted).kind == RowKind::ground);
  }

  TEST_CASE("normalized and evaluated") {
    Lattice l = catalog("lld11");
    RatVector n = normalized(l, ints({0, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4}));
    CHECK(n == fig2_values());
    ConstraintRow row{{0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}, RowKind::monotone, 2, 1};
    CHECK(evaluate(row, ints({0, 5, 3, 0, 0, 0, 0, 0, 0, 0, 0})) == 2);
    CHECK(parse_mode("reduced") == ConstraintMode::reduced);
    CHECK_THROWS(parse_mode("sideways"));
  }
}
