#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"
#include "shannon/rational.hpp"

namespace shannon {

struct PolymatroidFn {
  RatVector values;  // one per lattice element
};

enum class RowKind { ground, monotone, submodular };
std::string to_string(RowKind kind);

// One homogeneous row <coeffs, h> (= or >=) 0. For monotone rows x is the
// lower and y the upper element; for submodular rows x, y are the pair.
struct ConstraintRow {
  std::vector<int> coeffs;
  RowKind kind = RowKind::ground;
  Element x = 0;
  Element y = 0;
};

enum class ConstraintMode { full, reduced };
std::string to_string(ConstraintMode mode);
ConstraintMode parse_mode(const std::string& text);

struct ConstraintSystem {
  std::size_t dimension = 0;
  ConstraintMode mode = ConstraintMode::full;
  std::vector<ConstraintRow> equalities;
  std::vector<ConstraintRow> inequalities;
};

/// H-representation of the polymatroid cone. Reduced mode keeps monotone rows
/// only at meet-irreducibles and, on modular lattices, submodular rows only
/// for pairs covering their meet.
ConstraintSystem build_constraints(const Lattice& lattice, ConstraintMode mode);

struct RaySet {
  std::vector<IntVector> rays;  // primitive, lexicographically sorted
  std::size_t rows_processed = 0;
  std::size_t max_intermediate = 0;
  ConstraintMode mode = ConstraintMode::full;
};

struct DDOptions {
  unsigned threads = 1;
  std::size_t max_rays = 2'000'000;  // BudgetExceeded beyond this
};

/// Exact double description enumeration of the extreme rays of
/// {h : equalities == 0, inequalities >= 0}.
RaySet extreme_rays(const ConstraintSystem& system, const DDOptions& options = {});

/// Independent oracle: every rank (d-1) subsystem of the rows is solved and
/// the feasible solutions kept. Throws DimensionTooLarge above 12.
RaySet brute_force_rays(const ConstraintSystem& system);

struct PolymatroidCheck {
  bool ok = true;
  RowKind kind = RowKind::ground;  // violated row, when !ok
  Element x = 0;
  Element y = 0;
  std::string describe(const Lattice& lattice) const;
};

/// Full definition: h(bottom) = 0, monotone on covers, submodular on all pairs.
PolymatroidCheck is_polymatroid(const Lattice& lattice, std::span<const Rational> values);
PolymatroidCheck is_polymatroid(const Lattice& lattice, std::span<const Integer> values);
PolymatroidCheck is_polymatroid_approx(const Lattice& lattice, std::span<const double> values,
                                       double tolerance);

/// Value of a row on an integer vector.
Integer evaluate(const ConstraintRow& row, std::span<const Integer> v);

/// Ray scaled so that h(top) == 1 (display only).
RatVector normalized(const Lattice& lattice, std::span<const Integer> ray);

}  // namespace shannon
