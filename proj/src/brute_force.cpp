#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "shannon/cone.hpp"
#include "shannon/error.hpp"

namespace shannon {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("brute-force oracle overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("brute-force oracle overflow");
  return r;
}

std::int64_t dot(const std::vector<int>& row, const Vec& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (row[i] != 0) s = add(s, mul(row[i], v[i]));
  return s;
}

void reduce(Vec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Basis of {v in span(kernel) : <row, v> = 0}; returns false when the row
// vanishes on the whole kernel.
bool restrict(std::vector<Vec>& kernel, const std::vector<int>& row) {
  std::vector<std::int64_t> c(kernel.size());
  std::size_t p = kernel.size();
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    c[i] = dot(row, kernel[i]);
    if (c[i] != 0 && p == kernel.size()) p = i;
  }
  if (p == kernel.size()) return false;
  std::vector<Vec> next;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (i == p) continue;
    Vec v(kernel[i].size());
    for (std::size_t t = 0; t < v.size(); ++t)
      v[t] = add(mul(c[p], kernel[i][t]), -mul(c[i], kernel[p][t]));
    reduce(v);
    next.push_back(std::move(v));
  }
  kernel = std::move(next);
  return true;
}

struct Search {
  const std::vector<ConstraintRow>& rows;
  std::set<Vec> found;

  void leaf(const Vec& v) {
    bool nonneg = true, nonpos = true;
    for (const auto& r : rows) {
      std::int64_t s = dot(r.coeffs, v);
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg) found.insert(v);
    if (nonpos) {
      Vec w = v;
      for (auto& x : w) x = -x;
      found.insert(w);
    }
  }

  void dfs(const std::vector<Vec>& kernel, std::size_t from) {
    if (kernel.size() == 1) {
      leaf(kernel[0]);
      return;
    }
    const std::size_t need = kernel.size() - 1;
    for (std::size_t j = from; j + need <= rows.size(); ++j) {
      std::vector<Vec> k = kernel;
      if (restrict(k, rows[j].coeffs)) dfs(k, j + 1);
    }
  }
};

}  // namespace

RaySet brute_force_rays(const ConstraintSystem& system) {
  const std::size_t d = system.dimension;
  if (d > 12)
    throw DimensionTooLarge("brute-force oracle is limited to dimension 12, got " +
                            std::to_string(d));
  std::vector<Vec> kernel;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    kernel.push_back(std::move(e));
  }
  for (const auto& r : system.equalities) restrict(kernel, r.coeffs);

  RaySet out;
  out.mode = system.mode;
  out.rows_processed = system.equalities.size() + system.inequalities.size();
  if (kernel.empty()) return out;
  Search s{system.inequalities, {}};
  s.dfs(kernel, 0);
  for (const auto& v : s.found) {
    IntVector z;
    for (auto x : v) z.emplace_back(static_cast<long>(x));
    out.rays.push_back(std::move(z));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.max_intermediate = out.rays.size();
  return out;
}

}  // namespace shannon
