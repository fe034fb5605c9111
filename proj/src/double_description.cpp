#include <algorithm>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "shannon/cone.hpp"
#include "shannon/error.hpp"

namespace shannon {

namespace {

struct SparseRow {
  std::vector<std::pair<std::size_t, int>> terms;
  bool equality = false;
};

SparseRow sparse(const ConstraintRow& r, bool equality) {
  SparseRow s;
  s.equality = equality;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i] != 0) s.terms.emplace_back(i, r.coeffs[i]);
  return s;
}

Integer dot(const SparseRow& r, const IntVector& v) {
  Integer s = 0;
  for (auto [i, c] : r.terms) s += c * v[i];
  return s;
}

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zeros;
};

// Incremental row echelon form over the rationals, used to pick a basis.
class RankTracker {
 public:
  explicit RankTracker(std::size_t d) : d_(d) {}

  bool add(const std::vector<int>& coeffs) {
    RatVector r(coeffs.begin(), coeffs.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = r[pivot_[k]];
      if (f == 0) continue;
      Rational factor = f / rows_[k][pivot_[k]];
      for (std::size_t j = 0; j < d_; ++j) r[j] -= factor * rows_[k][j];
    }
    for (std::size_t j = 0; j < d_; ++j)
      if (r[j] != 0) {
        rows_.push_back(std::move(r));
        pivot_.push_back(j);
        return true;
      }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t d_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivot_;
};

std::vector<RatVector> invert(std::vector<RatVector> a) {
  const std::size_t d = a.size();
  std::vector<RatVector> inv(d, RatVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = a[c][c];
    for (std::size_t j = 0; j < d; ++j) {
      a[c][j] /= s;
      inv[c][j] /= s;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < d; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

bool row_less(const ConstraintRow& a, const ConstraintRow& b) {
  auto nnz = [](const ConstraintRow& r) {
    return std::count_if(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c != 0; });
  };
  auto na = nnz(a), nb = nnz(b);
  if (na != nb) return na < nb;
  return a.coeffs < b.coeffs;
}

}  // namespace

RaySet extreme_rays(const ConstraintSystem& system, const DDOptions& options) {
  const std::size_t d = system.dimension;
  RaySet out;
  out.mode = system.mode;

  std::vector<ConstraintRow> ineq = system.inequalities;
  std::stable_sort(ineq.begin(), ineq.end(), row_less);
  std::vector<SparseRow> rows;
  std::vector<const std::vector<int>*> dense;
  for (const auto& r : system.equalities) {
    rows.push_back(sparse(r, true));
    dense.push_back(&r.coeffs);
  }
  for (const auto& r : ineq) {
    rows.push_back(sparse(r, false));
    dense.push_back(&r.coeffs);
  }
  const std::size_t m = rows.size();

  RankTracker tracker(d);
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < m && tracker.rank() < d; ++i)
    if (tracker.add(*dense[i])) basis.push_back(i);
  if (tracker.rank() < d)
    throw DegenerateCone("constraint rows have rank " + std::to_string(tracker.rank()) +
                         " < " + std::to_string(d) + "; the cone is not pointed");

  std::vector<RatVector> a;
  for (std::size_t i : basis) a.emplace_back(dense[i]->begin(), dense[i]->end());
  std::vector<RatVector> inv = invert(a);

  std::vector<char> processed(m, 0);
  for (std::size_t i : basis) processed[i] = 1;
  std::vector<Ray> rays;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (rows[basis[b]].equality) continue;
    RatVector col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = inv[r][b];
    Ray ray{primitive_integer(col), boost::dynamic_bitset<>(m)};
    for (std::size_t c : basis)
      if (c != basis[b]) ray.zeros.set(c);
    rays.push_back(std::move(ray));
  }
  out.rows_processed = basis.size();
  out.max_intermediate = rays.size();

  const unsigned threads = std::max(1u, options.threads);
  for (std::size_t k = 0; k < m; ++k) {
    if (processed[k]) continue;
    processed[k] = 1;
    const SparseRow& row = rows[k];
    std::vector<Ray> zero, pos, neg;
    std::vector<Integer> spos, sneg;
    for (auto& r : rays) {
      Integer s = dot(row, r.v);
      int sign = sgn(s);
      if (sign == 0) {
        r.zeros.set(k);
        zero.push_back(std::move(r));
      } else if (sign > 0) {
        pos.push_back(std::move(r));
        spos.push_back(std::move(s));
      } else {
        neg.push_back(std::move(r));
        sneg.push_back(std::move(s));
      }
    }

    std::vector<const Ray*> all;
    for (const auto& r : zero) all.push_back(&r);
    for (const auto& r : pos) all.push_back(&r);
    for (const auto& r : neg) all.push_back(&r);

    auto combine = [&](std::size_t begin, std::size_t end, std::vector<Ray>& made) {
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) {
          boost::dynamic_bitset<> common = pos[i].zeros & neg[j].zeros;
          if (common.count() + 2 < d) continue;
          bool adjacent = true;
          for (const Ray* r : all) {
            if (r == &pos[i] || r == &neg[j]) continue;
            if (common.is_subset_of(r->zeros)) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          Ray nr{IntVector(d), common};
          Integer a = spos[i];
          Integer b = -sneg[j];
          for (std::size_t t = 0; t < d; ++t) nr.v[t] = a * neg[j].v[t] + b * pos[i].v[t];
          make_primitive(nr.v);
          nr.zeros.set(k);
          made.push_back(std::move(nr));
        }
    };

    std::vector<std::vector<Ray>> made(threads);
    if (threads == 1 || pos.size() < 2) {
      combine(0, pos.size(), made[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (pos.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        std::size_t b = t * chunk, e = std::min(pos.size(), b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e, t] { combine(b, e, made[t]); });
      }
      for (auto& th : pool) th.join();
    }

    std::vector<Ray> next = std::move(zero);
    if (!row.equality)
      for (auto& r : pos) next.push_back(std::move(r));
    for (auto& part : made)
      for (auto& r : part) next.push_back(std::move(r));
    rays = std::move(next);
    ++out.rows_processed;
    out.max_intermediate = std::max(out.max_intermediate, rays.size());
    if (rays.size() > options.max_rays)
      throw BudgetExceeded("double description exceeded " + std::to_string(options.max_rays) +
                           " intermediate rays");
  }

  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace shannon
