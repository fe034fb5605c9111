#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shannon/cone.hpp"
#include "shannon/gf.hpp"
#include "shannon/inequalities.hpp"
#include "shannon/lattice.hpp"
#include "shannon/rational.hpp"

namespace shannon {

// Elementary abelian group Z_p^k with an order-reversing assignment of
// subgroups (subspaces) to lattice elements.
struct GroupRealization {
  std::uint32_t p = 2;
  std::uint32_t k = 0;
  std::vector<gf::Subspace> subgroup;  // one per lattice element
};

struct EntropyVector {
  enum class Units { log_p, nats };
  Units units = Units::log_p;
  std::uint32_t log_base = 0;  // p, for log_p units
  RatVector exact;             // log_p units
  std::vector<double> approx;  // nats
  double tolerance = 0.0;
};

/// values[x] = k - dim(subgroup(x)) in units of log p. Throws InvalidAssignment.
EntropyVector entropy_from_groups(const Lattice& lattice, const GroupRealization& realization);

struct SampleSpace {
  std::vector<double> weights;
  // variables[x][outcome]: value label of the variable at element x
  std::vector<std::vector<std::int64_t>> variables;
};

/// Shannon entropies (nats) of the pushforward distributions. Throws
/// NotAProbability, JoinInconsistent, NotPolymatroid.
EntropyVector entropy_from_distribution(const Lattice& lattice, const SampleSpace& space,
                                        double tolerance = 1e-9);

/// Uniform distribution on Y, Z in Z_p with middle j carrying Y + jZ.
SampleSpace mn_sample_space(const Lattice& lattice, std::uint32_t p);
/// Uniform distribution over the tuples of a principal-ideal table.
SampleSpace tuple_sample_space(const Lattice& lattice);
/// Uniform distribution over the group, element x carrying the coset of
/// subgroup(x). Requires p^k small enough to enumerate.
SampleSpace group_sample_space(const GroupRealization& realization);

enum class Scheme { mn, grid, zero_one, half_valued };
std::string to_string(Scheme scheme);

struct RealizationParams {
  std::optional<std::uint32_t> p;
  RatVector target;  // required by zero_one / half_valued
};

/// Throws ShapeMismatch when the lattice (or target) does not fit the scheme.
GroupRealization standard_realization(const Lattice& lattice, Scheme scheme,
                                      const RealizationParams& params = {});

/// Pulls a realization of a closed lattice back along its projection.
GroupRealization pull_back(const Lattice& host, const std::vector<std::size_t>& projection,
                           const GroupRealization& closed);

/// Restricts to a meet-closed subset (ascending) viewed as a lattice.
/// Throws InvalidAssignment when the induced joins break the intersection law.
GroupRealization restrict_realization(const Lattice& host, const GroupRealization& realization,
                                      std::span<const Element> subset);

struct Budget {
  std::uint32_t max_k = 4;             // group rank Z_p^k
  std::uint32_t max_p = 5;             // largest prime tried
  std::uint64_t search_nodes = 200'000;
  std::uint64_t scan_assignments = 50'000'000;
  std::size_t max_rays = 2'000'000;
  unsigned threads = 1;
};

enum class CertificateKind {
  zero_one,
  half_valued,
  group_match,
  distribution_match,
  violation_witness,
  unknown
};
std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::unknown;
  Rational scale;  // ray = scale * entropy (log_p units)
  std::optional<GroupRealization> realization;
  std::optional<GapReport> gap;
  bool outside_abelian = false;  // ingleton-only witness
  std::string route;             // construction used, e.g. "mn", "grid", "search"

  bool entropic() const;
  bool non_entropic() const;  // zhang_yeung witness
};

/// Bounded search for a linear realization over Z_p^k, k <= budget.max_k,
/// p <= budget.max_p. Candidate rays are scaled so h(top) equals k.
std::optional<GroupRealization> search_group_realization(const Lattice& lattice,
                                                         std::span<const Integer> ray,
                                                         const Budget& budget,
                                                         Rational* scale = nullptr);

Certificate certify_ray(const Lattice& lattice, std::span<const Integer> ray,
                        const Budget& budget = {});

enum class Verdict { shannon, non_shannon, undecided };
std::string to_string(Verdict verdict);

struct ShannonResult {
  Verdict verdict = Verdict::undecided;
  RaySet rays;
  std::vector<Certificate> certificates;  // parallel to rays
  std::optional<std::size_t> witness;      // ray index with zhang_yeung witness
  std::vector<std::size_t> uncertified;
};

/// Enumerates the reduced cone and certifies every extreme ray.
ShannonResult check_shannon(const Lattice& lattice, const Budget& budget = {});

struct ConjectureEntry {
  std::size_t ray = 0;
  bool ingleton_holds = false;
  bool strong_union_holds = false;
  Certificate certificate;
};

/// Report-only: rays satisfying both the ingleton and strong union templates,
/// with their certificates. Never affects verdicts.
std::vector<ConjectureEntry> conjecture_report(const Lattice& lattice,
                                               const ShannonResult& result,
                                               const Budget& budget = {});

}  // namespace shannon
