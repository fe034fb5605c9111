// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "shannon/closure.hpp"
#include "shannon/cone.hpp"
#include "shannon/enumerate.hpp"
#include "shannon/error.hpp"
#include "shannon/inequalities.hpp"
#include "shannon/lattice.hpp"
#include "shannon/realizer.hpp"

using namespace shannon;

namespace {

// Pinned limits.
constexpr double kWitnessSeconds = 10.0;
constexpr double kMnSeconds = 30.0;
constexpr double kSmallLatticeSeconds = 600.0;
constexpr double kBooleanSeconds = 300.0;
constexpr double kReductionSeconds = 120.0;
constexpr double kOracleSeconds = 600.0;
constexpr double kDistributionTolerance = 1e-9;
constexpr std::size_t kPropertySamples = 200;
constexpr std::uint32_t kPropertySeed = 20240607;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Report {
 public:
  void run(const std::string& id, const std::string& title, double limit_seconds,
           const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      o.passed = false;
      o.detail += " [over time limit " + std::to_string(limit_seconds) + " s]";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (o.passed ? "PASS " : "FAIL ") << id << "  " << title << "  (" << timing
              << ")  " << o.detail << std::endl;
    failures_ += o.passed ? 0 : 1;
    ++count_;
  }
  int finish() const {
    std::cout << (count_ - failures_) << "/" << count_ << " criteria passed" << std::endl;
    return failures_ == 0 ? 0 : 1;
  }

 private:
  int failures_ = 0;
  int count_ = 0;
};

IntVector ints(std::initializer_list<long> values) {
  IntVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string join_values(std::span<const Integer> v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

bool reproduces(const Lattice& l, const Certificate& c, const IntVector& ray) {
  if (!c.realization) return false;
  EntropyVector e = entropy_from_groups(l, *c.realization);
  for (std::size_t i = 0; i < ray.size(); ++i)
    if (Rational(ray[i]) != c.scale * e.exact[i]) return false;
  return true;
}

Outcome witness_criterion() {
  Outcome o;
  Lattice l = catalog("lld11");
  ShannonResult r = check_shannon(l);
  std::ostringstream d;
  d << "verdict " << to_string(r.verdict);
  if (r.verdict != Verdict::non_shannon || !r.witness) return {false, d.str()};

  IntVector ray = r.rays.rays[*r.witness];
  IntVector expected = ints({0, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4});
  make_primitive(ray);
  d << ", witness (" << join_values(ray) << ")";
  o.passed = ray == expected;

  RatVector h = normalized(l, ray);
  Element bot = l.bottom(), q1 = *l.find("q1"), q2 = *l.find("q2"), q3 = *l.find("q3"),
          q4 = *l.find("q4");
  std::vector<Element> zy{q1, q4, q2, q3};
  std::vector<Element> ing{q2, q3, bot, q1, q4};
  Rational zy_gap = inequality_gap(l, h, Template::zhang_yeung, zy).gap;
  Rational ing_gap = inequality_gap(l, h, Template::ingleton, ing).gap;
  d << ", zhang_yeung(q1,q4,q2,q3) " << to_string(zy_gap) << ", ingleton(q2,q3,bot,q1,q4) "
    << to_string(ing_gap);
  o.passed = o.passed && zy_gap == Rational(-1, 4) && ing_gap == Rational(-1, 4);

  // Same result through the command-line front end.
  auto dir = std::filesystem::temp_directory_path() /
             ("shannon-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string lat = (dir / "lld.lat").string();
  std::ostringstream out, err;
  int cat = cli::run({"catalog", "lld11", "-o", lat}, out, err);
  std::ostringstream check_out;
  int code = cli::run({"check-shannon", lat}, check_out, err);
  std::filesystem::remove_all(dir);
  bool cli_ok = cat == cli::kOk && code == cli::kFinding &&
                check_out.str().find("verdict: non_shannon") != std::string::npos &&
                check_out.str().find("(q1, q4, q2, q3)") != std::string::npos;
  d << ", cli exit " << code;
  o.passed = o.passed && cli_ok;
  o.detail = d.str();
  return o;
}

Outcome mn_criterion() {
  Outcome o;
  std::ostringstream d;
  for (int n = 3; n <= 10; ++n) {
    Lattice l = catalog("m_n", std::vector<int>{n});
    ShannonResult r = check_shannon(l);
    std::set<RatVector> found;
    bool certified = r.verdict == Verdict::shannon;
    for (std::size_t i = 0; i < r.rays.rays.size(); ++i) {
      RatVector h = normalized(l, r.rays.rays[i]);
      found.insert(RatVector(h.begin() + 1, h.end() - 1));
      const Certificate& c = r.certificates[i];
      bool kind_ok = c.kind == CertificateKind::zero_one ||
                     c.kind == CertificateKind::half_valued ||
                     c.kind == CertificateKind::group_match;
      certified = certified && kind_ok && reproduces(l, c, r.rays.rays[i]);
    }
    bool family = found == oracle::mn_family(static_cast<std::size_t>(n - 2));
    d << "n=" << n << ":" << r.rays.rays.size() << (family ? "" : " family-mismatch")
      << (certified ? "" : " uncertified") << " ";
    o.passed = o.passed && family && certified;
  }
  o.detail = d.str();
  return o;
}

Outcome small_lattice_criterion() {
  Outcome o;
  std::ostringstream d;
  auto all = enumerate_lattices(7);
  std::vector<std::size_t> counts(8, 0);
  for (const auto& l : all) ++counts[l.size()];
  const std::vector<std::size_t> expected{0, 1, 1, 1, 2, 5, 15, 53};
  d << "counts";
  for (std::size_t n = 1; n <= 7; ++n) d << " " << counts[n];
  o.passed = counts == expected && all.size() == 78;
  d << ", total " << all.size();

  bool oracle_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<oracle::OrderMatrix> produced;
    for (const auto& l : all)
      if (l.size() == n) produced.insert(oracle::naive_canonical(l));
    oracle_ok = oracle_ok && produced.size() == counts[n] && produced == oracle::lattice_classes(n);
  }
  d << ", oracle<=6 " << (oracle_ok ? "agrees" : "DISAGREES");

  ClassificationReport report = classify_all(7, LatticeFilter::none);
  std::size_t shannon = report.histogram["shannon"];
  std::size_t undecided = report.histogram["undecided"];
  d << ", shannon " << shannon << "/" << report.total << ", undecided " << undecided;
  o.passed = o.passed && oracle_ok && report.total == 78 && shannon == 78 && undecided == 0;
  o.detail = d.str();
  return o;
}

Outcome boolean_criterion() {
  Lattice b4 = catalog("boolean_n", std::vector<int>{4});
  ShannonResult r = check_shannon(b4);
  std::size_t violating = 0;
  ScanOptions first;
  first.first_only = true;
  for (const auto& ray : r.rays.rays)
    if (!scan_quadruples(b4, to_rational(ray), Template::zhang_yeung, first).empty()) ++violating;
  std::ostringstream d;
  d << r.rays.rays.size() << " rays, " << violating << " with a zhang_yeung violation, verdict "
    << to_string(r.verdict);
  return {violating >= 1 && r.verdict == Verdict::non_shannon, d.str()};
}

std::vector<std::pair<std::string, Lattice>> small_catalog() {
  std::vector<std::pair<std::string, Lattice>> out;
  for (int k = 1; k <= 12; ++k)
    out.emplace_back("chain_" + std::to_string(k), catalog("chain_k", std::vector<int>{k}));
  for (int n = 0; n <= 3; ++n)
    out.emplace_back("boolean_" + std::to_string(n), catalog("boolean_n", std::vector<int>{n}));
  for (int k = 3; k <= 12; ++k)
    out.emplace_back("m_" + std::to_string(k), catalog("m_n", std::vector<int>{k}));
  for (int m = 2; m <= 6; ++m)
    for (int n = m; m * n <= 12; ++n)
      out.emplace_back("grid_" + std::to_string(m) + "x" + std::to_string(n),
                       catalog("grid_mxn", std::vector<int>{m, n}));
  for (const char* name : {"n5", "s7", "lld11"}) out.emplace_back(name, catalog(name));
  return out;
}

Outcome reduction_criterion() {
  Outcome o;
  std::size_t checked = 0;
  std::string mismatches;
  for (const auto& [name, l] : small_catalog()) {
    RaySet full = extreme_rays(build_constraints(l, ConstraintMode::full));
    RaySet reduced = extreme_rays(build_constraints(l, ConstraintMode::reduced));
    ++checked;
    if (full.rays != reduced.rays) {
      o.passed = false;
      mismatches += " " + name;
    }
  }
  o.detail = std::to_string(checked) + " catalog lattices" +
             (mismatches.empty() ? ", identical" : ", mismatches:" + mismatches);
  return o;
}

Outcome oracle_criterion() {
  Outcome o;
  std::size_t checked = 0, rays = 0;
  std::string mismatches;
  for (const auto& l : enumerate_lattices(8)) {
    ConstraintSystem s = build_constraints(l, ConstraintMode::full);
    RaySet dd = extreme_rays(s);
    RaySet bf = brute_force_rays(s);
    ++checked;
    rays += dd.rays.size();
    if (dd.rays != bf.rays) {
      o.passed = false;
      mismatches += " " + canonical_digest(l);
    }
  }
  o.detail = std::to_string(checked) + " lattices, " + std::to_string(rays) + " rays" +
             (mismatches.empty() ? ", identical" : ", mismatches:" + mismatches);
  return o;
}

Outcome realization_criterion() {
  Outcome o;
  std::ostringstream d;
  Lattice m7 = catalog("m_n", std::vector<int>{7});
  GroupRealization r = standard_realization(m7, Scheme::mn);
  EntropyVector e = entropy_from_groups(m7, r);
  RatVector half(7, Rational(1, 2));
  half[0] = 0;
  half[6] = 1;
  RatVector scaled = e.exact;
  for (auto& v : scaled) v /= e.exact[6];
  bool groups_ok = scaled == half;
  d << "M7 groups " << (groups_ok ? "all-1/2" : "MISMATCH");

  RealizationParams seven;
  seven.p = 7;
  EntropyVector e7 = entropy_from_groups(m7, standard_realization(m7, Scheme::mn, seven));
  EntropyVector dist = entropy_from_distribution(m7, mn_sample_space(m7, 7));
  std::vector<std::vector<long>> labels(7);
  for (long y = 0; y < 7; ++y)
    for (long z = 0; z < 7; ++z) {
      labels[0].push_back(0);
      for (long j = 1; j <= 5; ++j) labels[j].push_back((y + j * z) % 7);
      labels[6].push_back(y * 7 + z);
    }
  double worst = 0.0;
  for (Element x = 0; x < 7; ++x) {
    worst = std::max(worst, std::abs(dist.approx[x] - e7.exact[x].get_d() * std::log(7.0)));
    worst = std::max(worst, std::abs(dist.approx[x] - oracle::entropy_of_labels(labels[x])));
  }
  bool dist_ok = dist.approx.size() == 7 && worst <= kDistributionTolerance;
  d << ", 49-outcome max error " << worst;

  Lattice grid = catalog("grid_mxn", std::vector<int>{3, 3});
  RealizationParams five;
  five.p = 5;
  EntropyVector g = entropy_from_groups(grid, standard_realization(grid, Scheme::grid, five));
  Rational ratio = g.exact[grid.top()] / static_cast<long>(grid.height(grid.top()));
  bool grid_ok = ratio > 0;
  for (Element x = 0; x < grid.size(); ++x)
    grid_ok = grid_ok && g.exact[x] == ratio * static_cast<long>(grid.height(x));
  d << ", 3x3 grid " << (grid_ok ? "proportional to rank" : "NOT proportional");
  o.passed = groups_ok && dist_ok && grid_ok;
  o.detail = d.str();
  return o;
}

// Meet-closed subsets containing bottom and top, as ascending element lists.
std::vector<std::vector<Element>> meet_closed_subsets(const Lattice& l) {
  std::vector<Element> middles;
  for (Element x = 0; x < l.size(); ++x)
    if (x != l.bottom() && x != l.top()) middles.push_back(x);
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middles.size()); ++mask) {
    std::vector<char> in(l.size(), 0);
    in[l.bottom()] = in[l.top()] = 1;
    for (std::size_t i = 0; i < middles.size(); ++i)
      if (mask >> i & 1) in[middles[i]] = 1;
    bool closed = true;
    for (Element x = 0; x < l.size() && closed; ++x)
      for (Element y = 0; y < l.size() && closed; ++y)
        if (in[x] && in[y] && !in[l.meet(x, y)]) closed = false;
    if (!closed) continue;
    std::vector<Element> subset;
    for (Element x = 0; x < l.size(); ++x)
      if (in[x]) subset.push_back(x);
    out.push_back(std::move(subset));
  }
  return out;
}

// Sub-order of the host on `subset`, built without the library's induced view.
Lattice suborder(const Lattice& host, const std::vector<Element>& subset) {
  const std::size_t m = subset.size();
  std::vector<char> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = host.leq(subset[i], subset[j]);
  return Lattice::from_order(m, leq);
}

struct PropertyTally {
  std::size_t samples = 0;
  std::size_t semi_graphoid = 0, derived = 0, armstrong = 0;
  std::size_t subsets = 0, restriction = 0;
  std::size_t extensions = 0, extension_failures = 0;
  std::string first_restriction;
};

PropertyTally run_properties() {
  std::vector<Lattice> lattices = enumerate_lattices(8);
  std::vector<std::pair<std::size_t, IntVector>> pool;
  for (std::size_t i = 0; i < lattices.size(); ++i)
    for (auto& ray : extreme_rays(build_constraints(lattices[i], ConstraintMode::reduced)).rays)
      pool.emplace_back(i, std::move(ray));

  std::mt19937 rng(kPropertySeed);
  std::vector<std::size_t> picks;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<std::size_t> seen;
  while (picks.size() < kPropertySamples && seen.size() < pool.size()) {
    std::size_t k = pick(rng);
    if (seen.insert(k).second) picks.push_back(k);
  }

  PropertyTally t;
  for (std::size_t k : picks) {
    const Lattice& l = lattices[pool[k].first];
    RatVector h = normalized(l, pool[k].second);
    ++t.samples;

    AxiomAudit audit = audit_axioms(l, induced_relation(l, h));
    t.semi_graphoid += audit.semi_graphoid_ok() ? 0 : 1;
    t.derived += audit.derived_ok() ? 0 : 1;
    t.armstrong += armstrong_violation(l, polymatroid_dependence(l, h)).has_value() ? 1 : 0;

    for (const auto& subset : meet_closed_subsets(l)) {
      Lattice m = suborder(l, subset);
      RatVector restricted;
      for (Element x : subset) restricted.push_back(h[x]);
      ++t.subsets;
      if (oracle::is_polymatroid(m, restricted)) {
        // The restricted function pulled back through the closure of the subset.
        RatVector extended(l.size());
        for (Element x = 0; x < l.size(); ++x) {
          std::optional<Rational> least;
          for (std::size_t i = 0; i < subset.size(); ++i)
            if (l.leq(x, subset[i]) && (!least || restricted[i] < *least)) least = restricted[i];
          extended[x] = *least;
        }
        ++t.extensions;
        t.extension_failures += oracle::is_polymatroid(l, extended) ? 0 : 1;
        continue;
      }
      if (t.restriction++ == 0) {
        std::ostringstream s;
        s << "lattice " << canonical_digest(l) << " ray (" << join_values(pool[k].second)
          << ") subset {";
        for (std::size_t i = 0; i < subset.size(); ++i) s << (i ? "," : "") << subset[i];
        s << "}";
        t.first_restriction = s.str();
      }
    }
  }
  return t;
}

Outcome dimension_criterion() {
  Outcome o;
  std::ostringstream d;
  Lattice fd3 = catalog("free_distributive_3");
  auto dim = classify(fd3).order_dimension;
  bool fd3_ok = fd3.size() == 18 && canonical_form(fd3) == canonical_form(oracle::free_distributive_3()) &&
                dim && *dim <= 3 && *dim == oracle::join_irreducible_width(fd3);
  ShannonResult fd3_verdict = check_shannon(fd3);
  d << "free_distributive_3 dim " << (dim ? std::to_string(*dim) : "n/a") << " "
    << to_string(fd3_verdict.verdict);

  bool grids_ok = true;
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      Lattice g = catalog("grid_mxn", std::vector<int>{m, n});
      auto gd = classify(g).order_dimension;
      Verdict v = check_shannon(g).verdict;
      grids_ok = grids_ok && gd == std::optional<std::size_t>{2} && v != Verdict::non_shannon;
    }
  d << ", grids " << (grids_ok ? "dim 2" : "WRONG");

  Lattice b4 = catalog("boolean_n", std::vector<int>{4});
  auto bd = classify(b4).order_dimension;
  Verdict bv = check_shannon(b4).verdict;
  bool b4_ok = bd == std::optional<std::size_t>{4} && bv == Verdict::non_shannon;
  d << ", boolean_4 dim " << (bd ? std::to_string(*bd) : "n/a") << " " << to_string(bv);

  // Every distributive lattice with a verdict: shannon exactly when dim <= 3.
  std::size_t consistent = 0, checked = 0;
  auto consistent_with = [&](const Lattice& l, Verdict v) {
    auto ld = classify(l).order_dimension;
    if (v == Verdict::undecided || !ld) return;
    ++checked;
    consistent += (v == Verdict::shannon) == (*ld <= 3) ? 1 : 0;
  };
  for (const auto& l : enumerate_lattices(8, LatticeFilter::distributive))
    consistent_with(l, check_shannon(l).verdict);
  consistent_with(fd3, fd3_verdict.verdict);
  consistent_with(b4, bv);
  d << ", verdict/dimension consistent " << consistent << "/" << checked;
  o.passed = fd3_ok && grids_ok && b4_ok && consistent == checked;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  Report report;
  report.run("c1", "lld11 non-Shannon witness", kWitnessSeconds, witness_criterion);
  report.run("c2", "M_n extreme rays n=3..10 certified", kMnSeconds, mn_criterion);
  report.run("c3", "lattices up to 7 elements", kSmallLatticeSeconds, small_lattice_criterion);
  report.run("c4", "Boolean lattice B4", kBooleanSeconds, boolean_criterion);
  report.run("c5", "full vs reduced constraints on catalog <= 12", kReductionSeconds,
             reduction_criterion);
  report.run("c6", "double description vs brute force <= 8", kOracleSeconds, oracle_criterion);
  report.run("c7", "realization suite", 0, realization_criterion);

  PropertyTally tally;
  report.run("c8", "property suites on sampled rays", 0, [&] {
    tally = run_properties();
    std::ostringstream d;
    d << tally.samples << " rays: semi-graphoid failures " << tally.semi_graphoid
      << ", derived failures " << tally.derived << ", armstrong failures " << tally.armstrong
      << ", restriction failures " << tally.restriction << "/" << tally.subsets
      << " meet-closed subsets";
    if (!tally.first_restriction.empty()) d << " (first: " << tally.first_restriction << ")";
    bool ok = tally.samples == kPropertySamples && tally.semi_graphoid == 0 && tally.derived == 0 &&
              tally.armstrong == 0 && tally.restriction == 0;
    return Outcome{ok, d.str()};
  });
  std::cout << "INFO c8  closure extension of polymatroid restrictions: " << tally.extensions
            << " checked, " << tally.extension_failures << " not polymatroid" << std::endl;

  report.run("c9", "order dimension criterion", 0, dimension_criterion);
  return report.finish();
}
