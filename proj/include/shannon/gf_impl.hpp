#pragma once

// Subspace enumeration in RREF coordinates.

#include <functional>

namespace shannon::gf::detail {

// Enumerates d x r RREF matrices over F_p; each row gives a combination of the
// r basis vectors.
inline bool enumerate_rref(std::uint32_t p, std::size_t r, std::size_t d,
                           const std::function<bool(const std::vector<Vec>&)>& leaf) {
  std::vector<std::size_t> pivots;
  std::vector<Vec> rows;
  // choose pivot columns, then free entries
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                             std::size_t left) -> bool {
    if (left == 0) {
      // free positions: row i, column c > pivots[i], c not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = pivots[i] + 1; c < r; ++c) {
          bool is_pivot = false;
          for (auto q : pivots) is_pivot = is_pivot || q == c;
          if (!is_pivot) free.emplace_back(i, c);
        }
      rows.assign(pivots.size(), Vec(r, 0));
      for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = 1;
      std::function<bool(std::size_t)> fill = [&](std::size_t pos) -> bool {
        if (pos == free.size()) return leaf(rows);
        auto [i, c] = free[pos];
        for (std::uint32_t v = 0; v < p; ++v) {
          rows[i][c] = v;
          if (!fill(pos + 1)) return false;
        }
        rows[i][c] = 0;
        return true;
      };
      return fill(0);
    }
    for (std::size_t c = start; c + left <= r; ++c) {
      pivots.push_back(c);
      if (!choose(c + 1, left - 1)) return false;
      pivots.pop_back();
    }
    return true;
  };
  return choose(0, d);
}

}  // namespace shannon::gf::detail

namespace shannon::gf {

template <typename Visit>
bool for_each_subspace(std::uint32_t p, std::uint32_t k, const std::vector<Vec>& basis,
                       std::size_t d, Visit&& visit) {
  const std::size_t r = basis.size();
  if (d > r) return true;
  return detail::enumerate_rref(p, r, d, [&](const std::vector<Vec>& coords) {
    std::vector<Vec> vectors;
    vectors.reserve(coords.size());
    for (const auto& row : coords) {
      Vec v(k, 0);
      for (std::size_t j = 0; j < r; ++j) {
        if (row[j] == 0) continue;
        for (std::uint32_t t = 0; t < k; ++t)
          v[t] = static_cast<std::uint32_t>((v[t] + std::uint64_t(row[j]) * basis[j][t]) % p);
      }
      vectors.push_back(std::move(v));
    }
    return visit(Subspace::span(p, k, std::move(vectors)));
  });
}

}  // namespace shannon::gf
