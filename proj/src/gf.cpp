#include "shannon/gf.hpp"

#include "shannon/error.hpp"

namespace shannon::gf {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime_above(std::uint32_t n) {
  std::uint32_t q = n + 1;
  while (!is_prime(q)) ++q;
  return q;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw BadParams("zero has no inverse");
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

// In-place RREF; returns the pivot column of each surviving row.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::uint32_t p, std::uint32_t k) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    std::uint64_t inv = inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < k; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - f) * rows[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t pivot_of(const Vec& row) {
  std::size_t c = 0;
  while (row[c] == 0) ++c;
  return c;
}

}  // namespace

Subspace Subspace::span(std::uint32_t p, std::uint32_t k, std::vector<Vec> vectors) {
  for (auto& v : vectors) {
    if (v.size() != k) throw BadParams("vector has the wrong length");
    for (auto& x : v) x %= p;
  }
  rref(vectors, p, k);
  Subspace s(p, k);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::whole(std::uint32_t p, std::uint32_t k) {
  std::vector<Vec> e(k, Vec(k, 0));
  for (std::uint32_t i = 0; i < k; ++i) e[i][i] = 1;
  return span(p, k, std::move(e));
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  for (auto& x : w) x %= p_;
  for (const auto& row : basis_) {
    std::size_t c = pivot_of(row);
    std::uint64_t f = w[c];
    if (f == 0) continue;
    for (std::size_t j = 0; j < k_; ++j)
      w[j] = static_cast<std::uint32_t>((w[j] + (p_ - f) * row[j]) % p_);
  }
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, k_, std::move(all));
}

Subspace Subspace::annihilator() const {
  std::vector<char> is_pivot(k_, 0);
  std::vector<std::size_t> pivots;
  for (const auto& row : basis_) {
    pivots.push_back(pivot_of(row));
    is_pivot[pivots.back()] = 1;
  }
  std::vector<Vec> out;
  for (std::size_t c = 0; c < k_; ++c) {
    if (is_pivot[c]) continue;
    Vec f(k_, 0);
    f[c] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      f[pivots[i]] = (p_ - basis_[i][c]) % p_;
    out.push_back(std::move(f));
  }
  return span(p_, k_, std::move(out));
}

Subspace Subspace::intersection(const Subspace& other) const {
  return annihilator().sum(other.annihilator()).annihilator();
}

}  // namespace shannon::gf
