#include "shannon/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "shannon/error.hpp"

namespace shannon {

std::string to_string(LatticeFilter filter) {
  switch (filter) {
    case LatticeFilter::none: return "none";
    case LatticeFilter::modular: return "modular";
    case LatticeFilter::distributive: return "distributive";
    case LatticeFilter::lower_locally_distributive: return "lower_locally_distributive";
  }
  return "?";
}

LatticeFilter parse_filter(const std::string& text) {
  if (text == "none") return LatticeFilter::none;
  if (text == "modular") return LatticeFilter::modular;
  if (text == "distributive") return LatticeFilter::distributive;
  if (text == "lower_locally_distributive" || text == "lld")
    return LatticeFilter::lower_locally_distributive;
  throw BadParams("unknown filter '" + text + "'");
}

bool accepts(LatticeFilter filter, const Lattice& lattice) {
  switch (filter) {
    case LatticeFilter::none: return true;
    case LatticeFilter::modular: return is_modular(lattice);
    case LatticeFilter::distributive: return is_distributive(lattice);
    case LatticeFilter::lower_locally_distributive: return is_lower_locally_distributive(lattice);
  }
  return false;
}

namespace {

Lattice decode(const std::string& form) {
  const std::size_t n = (std::size_t(static_cast<unsigned char>(form[0])) << 8) |
                        static_cast<unsigned char>(form[1]);
  std::vector<char> leq(n * n);
  for (std::size_t b = 0; b < n * n; ++b) {
    unsigned char byte = static_cast<unsigned char>(form[2 + b / 8]);
    leq[b] = (byte >> (7 - b % 8)) & 1;
  }
  return Lattice::from_order(n, leq);
}

// Every lattice with n + 1 >= 3 elements is some n-element lattice plus a new
// atom. With U the set of upper covers of the atom, the extension is a lattice
// exactly when the up-set of U together with bottom is closed under meets.
void extend(const Lattice& k, std::set<std::string>& out) {
  const Element m = static_cast<Element>(k.size());
  std::vector<Element> candidates;
  for (Element x = 0; x < m; ++x)
    if (x != k.bottom()) candidates.push_back(x);

  std::vector<Element> chosen;
  auto emit = [&] {
    std::vector<char> up(m, 0);
    for (Element x = 0; x < m; ++x)
      for (Element u : chosen)
        if (k.leq(u, x)) up[x] = 1;
    for (Element x = 0; x < m; ++x)
      for (Element y = x + 1; y < m; ++y)
        if (up[x] && up[y]) {
          Element z = k.meet(x, y);
          if (!up[z] && z != k.bottom()) return;
        }
    const std::size_t n = m + 1;
    std::vector<char> leq(n * n, 0);
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y) leq[x * n + y] = k.leq(x, y);
    const Element a = m;
    leq[a * n + a] = 1;
    leq[k.bottom() * n + a] = 1;
    for (Element x = 0; x < m; ++x)
      if (up[x]) leq[a * n + x] = 1;
    out.insert(canonical_form(Lattice::from_order(n, leq)));
  };

  // antichains of candidates, built in index order
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!chosen.empty()) emit();
    for (std::size_t i = from; i < candidates.size(); ++i) {
      Element c = candidates[i];
      bool free = std::none_of(chosen.begin(), chosen.end(),
                               [&](Element u) { return k.comparable(u, c); });
      if (!free) continue;
      chosen.push_back(c);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
}

}  // namespace

std::vector<Lattice> enumerate_lattices(std::size_t max_size, LatticeFilter filter) {
  if (max_size > 11)
    throw SizeTooLarge("enumeration is limited to 11 elements, got " + std::to_string(max_size));
  std::vector<Lattice> out;
  if (max_size == 0) return out;
  std::vector<Lattice> level{Lattice::from_order(1, {1})};
  for (std::size_t size = 1;; ++size) {
    for (const auto& l : level)
      if (accepts(filter, l)) out.push_back(l);
    if (size == max_size) break;
    std::set<std::string> next;
    if (size == 1) {
      next.insert(canonical_form(catalog("chain", std::vector<int>{2})));
    } else {
      for (const auto& l : level) extend(l, next);
    }
    level.clear();
    for (const auto& form : next) level.push_back(decode(form));
  }
  return out;
}

ClassificationReport classify_all(std::size_t max_size, LatticeFilter filter,
                                  const Budget& budget) {
  ClassificationReport report;
  for (const Lattice& l : enumerate_lattices(max_size, filter)) {
    ++report.total;
    ++report.counts_by_size[l.size()];
    ClassifiedLattice entry{l, to_hex(canonical_form(l)), "", std::nullopt, {}};
    try {
      ShannonResult r = check_shannon(l, budget);
      entry.status = to_string(r.verdict);
      if (r.witness) entry.witness = r.rays.rays[*r.witness];
      for (std::size_t i : r.uncertified) entry.uncertified.push_back(r.rays.rays[i]);
    } catch (const Error& e) {
      entry.status = e.kind();
    }
    ++report.histogram[entry.status];
    if (entry.status != "shannon") report.flagged.push_back(std::move(entry));
  }
  return report;
}

}  // namespace shannon
