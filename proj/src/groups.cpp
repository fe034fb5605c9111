#include <algorithm>

#include "shannon/error.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

EntropyVector entropy_from_groups(const Lattice& lattice, const GroupRealization& r) {
  const Element n = static_cast<Element>(lattice.size());
  if (r.subgroup.size() != n)
    throw InvalidAssignment("realization assigns " + std::to_string(r.subgroup.size()) +
                            " subgroups to " + std::to_string(n) + " elements");
  for (Element x = 0; x < n; ++x)
    if (r.subgroup[x].prime() != r.p || r.subgroup[x].ambient() != r.k)
      throw InvalidAssignment("subgroup of " + lattice.name(x) + " lives in another group");
  if (r.subgroup[lattice.bottom()].dim() != r.k)
    throw InvalidAssignment("bottom element must carry the whole group");
  for (auto [lo, hi] : lattice.covers())
    if (!r.subgroup[lo].contains(r.subgroup[hi]))
      throw InvalidAssignment("not order-reversing at (" + lattice.name(lo) + ", " +
                              lattice.name(hi) + ")");
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (lattice.comparable(x, y)) continue;
      if (!(r.subgroup[lattice.join(x, y)] == r.subgroup[x].intersection(r.subgroup[y])))
        throw InvalidAssignment("subgroup of the join of " + lattice.name(x) + " and " +
                                lattice.name(y) + " is not the intersection");
    }
  EntropyVector e;
  e.units = EntropyVector::Units::log_p;
  e.log_base = r.p;
  for (Element x = 0; x < n; ++x)
    e.exact.emplace_back(static_cast<long>(r.k - r.subgroup[x].dim()));
  auto check = is_polymatroid(lattice, e.exact);
  if (!check.ok) throw std::logic_error("group entropy is not polymatroid: " + check.describe(lattice));
  return e;
}

GroupRealization pull_back(const Lattice& host, const std::vector<std::size_t>& projection,
                           const GroupRealization& closed) {
  if (projection.size() != host.size()) throw BadParams("projection has the wrong size");
  GroupRealization out{closed.p, closed.k, {}};
  for (std::size_t i : projection) {
    if (i >= closed.subgroup.size()) throw BadParams("projection leaves the closed lattice");
    out.subgroup.push_back(closed.subgroup[i]);
  }
  return out;
}

GroupRealization restrict_realization(const Lattice& host, const GroupRealization& realization,
                                      std::span<const Element> subset) {
  Lattice induced = induced_lattice(host, subset);
  std::vector<Element> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  GroupRealization out{realization.p, realization.k, {}};
  for (Element x : s) out.subgroup.push_back(realization.subgroup.at(x));
  entropy_from_groups(induced, out);
  return out;
}

namespace {

// Search in the dual: each element x carries the functional space V_x, the sum
// of V_j over join-irreducibles j <= x, and its subgroup is the annihilator.
class LinearSearch {
 public:
  LinearSearch(const Lattice& l, std::vector<std::size_t> target, std::uint64_t& nodes,
               std::uint64_t limit)
      : l_(l), target_(std::move(target)), nodes_(nodes), limit_(limit) {
    const Element n = static_cast<Element>(l.size());
    for (Element x = 0; x < n; ++x)
      if (l.lower_covers(x).size() == 1) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Element a, Element b) { return l.height(a) < l.height(b); });
    complete_.resize(order_.size());
    for (Element x = 0; x < n; ++x) {
      std::size_t last = order_.size();
      for (std::size_t t = 0; t < order_.size(); ++t)
        if (l.leq(order_[t], x)) last = t;
      if (last < order_.size()) complete_[last].push_back(x);
    }
  }

  std::optional<GroupRealization> run(std::uint32_t p, std::uint32_t k) {
    p_ = p;
    k_ = k;
    assigned_.assign(order_.size(), gf::Subspace(p, k));
    found_ = false;
    if (order_.empty()) {
      if (k != 0) return std::nullopt;
    } else {
      dfs(0);
    }
    if (!found_ && !order_.empty()) return std::nullopt;
    GroupRealization out{p, k, {}};
    for (Element x = 0; x < l_.size(); ++x) out.subgroup.push_back(space_of(x).annihilator());
    return out;
  }

  bool exhausted() const { return nodes_ > limit_; }

 private:
  gf::Subspace space_of(Element x) const {
    gf::Subspace s(p_, k_);
    std::size_t upto = found_ ? order_.size() : depth_;
    for (std::size_t t = 0; t < upto; ++t)
      if (l_.leq(order_[t], x)) s = s.sum(assigned_[t]);
    return s;
  }

  bool consistent(std::size_t t) const {
    for (Element x : complete_[t])
      if (space_of(x).dim() != target_[x]) return false;
    return true;
  }

  bool leaf_valid() {
    found_ = true;
    GroupRealization r{p_, k_, {}};
    for (Element x = 0; x < l_.size(); ++x) r.subgroup.push_back(space_of(x).annihilator());
    try {
      EntropyVector e = entropy_from_groups(l_, r);
      for (Element x = 0; x < l_.size(); ++x)
        if (e.exact[x] != static_cast<long>(target_[x])) throw InvalidAssignment("value");
    } catch (const InvalidAssignment&) {
      found_ = false;
    }
    return found_;
  }

  // Returns true once a valid assignment is found.
  bool dfs(std::size_t t) {
    if (++nodes_ > limit_) return false;
    if (t == order_.size()) return leaf_valid();
    const Element j = order_[t];
    depth_ = t;
    gf::Subspace below = space_of(l_.lower_covers(j).front());
    const std::size_t want = target_[j];
    if (want < below.dim() || want > k_) return false;
    std::vector<gf::Vec> complement;
    {
      std::vector<char> pivot(k_, 0);
      for (const auto& row : below.basis()) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        pivot[c] = 1;
      }
      for (std::uint32_t c = 0; c < k_; ++c)
        if (!pivot[c]) {
          gf::Vec e(k_, 0);
          e[c] = 1;
          complement.push_back(std::move(e));
        }
    }
    const std::size_t extra = want - below.dim();
    auto attempt = [&](const gf::Subspace& w) {
      assigned_[t] = below.sum(w);
      depth_ = t + 1;
      if (consistent(t) && dfs(t + 1)) return false;  // stop enumeration
      depth_ = t;
      return !exhausted();
    };
    // Every element of the first step sees the zero space below it, and GL(k)
    // acts transitively on subspaces of one dimension, so one choice suffices.
    if (t == 0) {
      std::vector<gf::Vec> first(complement.begin(), complement.begin() + extra);
      attempt(gf::Subspace::span(p_, k_, first));
      return found_;
    }
    gf::for_each_subspace(p_, k_, complement, extra, attempt);
    return found_;
  }

  const Lattice& l_;
  std::vector<std::size_t> target_;
  std::uint64_t& nodes_;
  std::uint64_t limit_;
  std::vector<Element> order_;
  std::vector<std::vector<Element>> complete_;
  std::vector<gf::Subspace> assigned_;
  std::size_t depth_ = 0;
  std::uint32_t p_ = 2, k_ = 0;
  bool found_ = false;
};

}  // namespace

std::optional<GroupRealization> search_group_realization(const Lattice& lattice,
                                                         std::span<const Integer> ray,
                                                         const Budget& budget, Rational* scale) {
  if (ray.size() != lattice.size()) throw BadParams("ray has the wrong length");
  const Integer& t = ray[lattice.top()];
  if (t <= 0) return std::nullopt;
  std::uint64_t nodes = 0;
  for (std::uint32_t k = 1; k <= budget.max_k; ++k) {
    std::vector<std::size_t> target;
    bool integral = true;
    for (const auto& v : ray) {
      Integer num = v * k;
      if (num % t != 0) {
        integral = false;
        break;
      }
      target.push_back(Integer(num / t).get_ui());
    }
    if (!integral) continue;
    LinearSearch search(lattice, target, nodes, budget.search_nodes);
    for (std::uint32_t p = 2; p <= budget.max_p; ++p) {
      if (!gf::is_prime(p)) continue;
      if (auto r = search.run(p, k)) {
        if (scale) {
          *scale = Rational(t, k);
          scale->canonicalize();
        }
        return r;
      }
      if (search.exhausted()) return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace shannon
