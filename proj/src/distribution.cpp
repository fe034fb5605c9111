#include <cmath>
#include <map>

#include "shannon/closure.hpp"
#include "shannon/error.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

EntropyVector entropy_from_distribution(const Lattice& lattice, const SampleSpace& space,
                                        double tolerance) {
  const Element n = static_cast<Element>(lattice.size());
  const std::size_t outcomes = space.weights.size();
  double total = 0.0;
  for (double w : space.weights) {
    if (!(w > 0.0)) throw NotAProbability("outcome weights must be positive");
    total += w;
  }
  if (outcomes == 0 || std::abs(total - 1.0) > tolerance)
    throw NotAProbability("outcome weights sum to " + std::to_string(total));
  if (space.variables.size() != n)
    throw BadParams("sample space needs one variable per lattice element");
  for (const auto& v : space.variables)
    if (v.size() != outcomes) throw BadParams("variable is not defined on every outcome");

  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      const auto& joint = space.variables[lattice.join(x, y)];
      std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> seen;
      for (std::size_t o = 0; o < outcomes; ++o) {
        auto pair = std::make_pair(space.variables[x][o], space.variables[y][o]);
        auto [it, fresh] = seen.emplace(joint[o], pair);
        if (!fresh && it->second != pair)
          throw JoinInconsistent("variable at " + lattice.name(lattice.join(x, y)) +
                                 " does not determine the pair (" + lattice.name(x) + ", " +
                                 lattice.name(y) + ")");
      }
    }

  EntropyVector e;
  e.units = EntropyVector::Units::nats;
  e.tolerance = tolerance;
  for (Element x = 0; x < n; ++x) {
    std::map<std::int64_t, double> mass;
    for (std::size_t o = 0; o < outcomes; ++o) mass[space.variables[x][o]] += space.weights[o];
    double h = 0.0;
    for (auto [_, m] : mass) h -= m * std::log(m);
    e.approx.push_back(std::max(h, 0.0));
  }
  auto check = is_polymatroid_approx(lattice, e.approx, tolerance);
  if (!check.ok) throw NotPolymatroid(check.describe(lattice));
  return e;
}

SampleSpace mn_sample_space(const Lattice& lattice, std::uint32_t p) {
  const Element n = static_cast<Element>(lattice.size());
  Element bot = lattice.bottom(), top = lattice.top();
  SampleSpace s;
  s.weights.assign(std::size_t(p) * p, 1.0 / (double(p) * p));
  s.variables.assign(n, std::vector<std::int64_t>(std::size_t(p) * p, 0));
  std::int64_t j = 0;
  for (Element x = 0; x < n; ++x) {
    if (x == bot) continue;
    if (x != top) {
      if (lattice.lower_covers(x) != std::vector<Element>{bot} ||
          lattice.upper_covers(x) != std::vector<Element>{top})
        throw ShapeMismatch("lattice is not of the form M_k");
      ++j;
      if (j >= p) throw ShapeMismatch("prime too small for the number of middle elements");
    }
    for (std::int64_t y = 0; y < p; ++y)
      for (std::int64_t z = 0; z < p; ++z)
        s.variables[x][std::size_t(y * p + z)] = x == top ? y * p + z : (y + j * z) % p;
  }
  return s;
}

SampleSpace tuple_sample_space(const Lattice& lattice) {
  TupleRealization t = tuple_realization(lattice);
  const Element n = static_cast<Element>(lattice.size());
  SampleSpace s;
  s.weights.assign(t.table.rows.size(), 1.0 / double(t.table.rows.size()));
  for (Element x = 0; x < n; ++x) {
    std::map<std::vector<char>, std::int64_t> ids;
    std::vector<std::int64_t> values;
    for (const auto& row : t.table.rows) {
      std::vector<char> key;
      for (Element i = 0; i < n; ++i)
        if (lattice.leq(i, x)) key.push_back(row[i]);
      auto [it, _] = ids.emplace(std::move(key), static_cast<std::int64_t>(ids.size()));
      values.push_back(it->second);
    }
    s.variables.push_back(std::move(values));
  }
  return s;
}

SampleSpace group_sample_space(const GroupRealization& r) {
  double size = std::pow(double(r.p), double(r.k));
  if (size > 1e6) throw BudgetExceeded("group too large to enumerate as a sample space");
  const std::size_t count = static_cast<std::size_t>(size);
  SampleSpace s;
  s.weights.assign(count, 1.0 / size);
  for (const auto& sub : r.subgroup) {
    gf::Subspace ann = sub.annihilator();
    std::vector<std::int64_t> values(count);
    for (std::size_t g = 0; g < count; ++g) {
      gf::Vec v(r.k);
      std::size_t c = g;
      for (std::uint32_t t = 0; t < r.k; ++t) {
        v[t] = static_cast<std::uint32_t>(c % r.p);
        c /= r.p;
      }
      std::int64_t code = 0;
      for (const auto& f : ann.basis()) {
        std::uint64_t dot = 0;
        for (std::uint32_t t = 0; t < r.k; ++t) dot += std::uint64_t(f[t]) * v[t];
        code = code * r.p + static_cast<std::int64_t>(dot % r.p);
      }
      values[g] = code;
    }
    s.variables.push_back(std::move(values));
  }
  return s;
}

}  // namespace shannon
