#pragma once

#include <cstdint>
#include <vector>

namespace shannon::gf {

using Vec = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n);
/// Smallest prime strictly greater than n.
std::uint32_t next_prime_above(std::uint32_t n);

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

// Subspace of F_p^k kept in reduced row echelon form, so equal subspaces have
// identical representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {}

  static Subspace span(std::uint32_t p, std::uint32_t k, std::vector<Vec> vectors);
  static Subspace whole(std::uint32_t p, std::uint32_t k);
  static Subspace zero(std::uint32_t p, std::uint32_t k) { return Subspace(p, k); }

  std::uint32_t prime() const { return p_; }
  std::uint32_t ambient() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// {f : f . v = 0 for all v in this}.
  Subspace annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::uint32_t p_ = 2;
  std::uint32_t k_ = 0;
  std::vector<Vec> basis_;
};

/// Calls visit(Subspace) for every d-dimensional subspace of the span of
/// `basis` (a list of independent vectors). Stops early when visit returns
/// false; returns false in that case.
template <typename Visit>
bool for_each_subspace(std::uint32_t p, std::uint32_t k, const std::vector<Vec>& basis,
                       std::size_t d, Visit&& visit);

}  // namespace shannon::gf

#include "shannon/gf_impl.hpp"
