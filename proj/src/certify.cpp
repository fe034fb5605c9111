#include "shannon/error.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::zero_one: return "zero_one";
    case CertificateKind::half_valued: return "half_valued";
    case CertificateKind::group_match: return "group_match";
    case CertificateKind::distribution_match: return "distribution_match";
    case CertificateKind::violation_witness: return "violation_witness";
    case CertificateKind::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::shannon: return "shannon";
    case Verdict::non_shannon: return "non_shannon";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

bool Certificate::entropic() const {
  return kind == CertificateKind::zero_one || kind == CertificateKind::half_valued ||
         kind == CertificateKind::group_match || kind == CertificateKind::distribution_match;
}

bool Certificate::non_entropic() const {
  return kind == CertificateKind::violation_witness && !outside_abelian;
}

namespace {

bool values_in_levels(std::span<const Integer> ray, const Integer& top, int levels) {
  for (const auto& v : ray) {
    Integer scaled = v * levels;
    if (scaled % top != 0) return false;
  }
  return true;
}

// ray == scale * entropy, exactly
bool matches(std::span<const Integer> ray, const EntropyVector& e, Rational& scale) {
  std::size_t ref = 0;
  while (ref < ray.size() && e.exact[ref] == 0) ++ref;
  if (ref == ray.size()) return false;
  scale = Rational(ray[ref]) / e.exact[ref];
  scale.canonicalize();
  if (scale <= 0) return false;
  for (std::size_t i = 0; i < ray.size(); ++i)
    if (Rational(ray[i]) != scale * e.exact[i]) return false;
  return true;
}

std::optional<Certificate> through_scheme(const Lattice& l, std::span<const Integer> ray,
                                          Scheme scheme, CertificateKind kind,
                                          const std::string& route) {
  RealizationParams params;
  params.target = to_rational(ray);
  try {
    GroupRealization r = standard_realization(l, scheme, params);
    Certificate c;
    if (!matches(ray, entropy_from_groups(l, r), c.scale)) return std::nullopt;
    c.kind = kind;
    c.realization = std::move(r);
    c.route = route;
    return c;
  } catch (const ShapeMismatch&) {
    return std::nullopt;
  }
}

std::optional<GapReport> violation(const Lattice& l, const RatVector& h, Template t,
                                   const Budget& budget) {
  ScanOptions opts;
  opts.budget = budget.scan_assignments;
  opts.first_only = true;
  try {
    if (scan_quadruples(l, h, t, opts).empty()) return std::nullopt;
    opts.first_only = false;
    return minimum_gap(l, h, t, opts);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

Certificate certify_ray(const Lattice& lattice, std::span<const Integer> ray,
                        const Budget& budget) {
  if (ray.size() != lattice.size()) throw BadParams("ray has the wrong length");
  Certificate unknown;
  const Integer top = ray[lattice.top()];
  if (top <= 0) return unknown;

  if (values_in_levels(ray, top, 1))
    if (auto c = through_scheme(lattice, ray, Scheme::zero_one, CertificateKind::zero_one,
                                "zero_one"))
      return *c;
  if (values_in_levels(ray, top, 2))
    if (auto c = through_scheme(lattice, ray, Scheme::half_valued, CertificateKind::half_valued,
                                "half_valued/mn"))
      return *c;
  if (is_modular(lattice)) {
    bool rank_proportional = true;
    const std::size_t rank = lattice.height(lattice.top());
    for (Element x = 0; x < lattice.size(); ++x)
      if (ray[x] * rank != top * lattice.height(x)) rank_proportional = false;
    if (rank_proportional)
      if (auto c = through_scheme(lattice, ray, Scheme::grid, CertificateKind::group_match, "grid"))
        return *c;
  }

  // A linear realization satisfies every Zhang-Yeung instance, so a witness
  // found here settles the ray before the costlier group search.
  const RatVector h = to_rational(ray);
  if (auto g = violation(lattice, h, Template::zhang_yeung, budget)) {
    Certificate c;
    c.kind = CertificateKind::violation_witness;
    c.gap = std::move(g);
    c.route = "zhang_yeung";
    return c;
  }

  Rational scale;
  if (auto r = search_group_realization(lattice, ray, budget, &scale)) {
    Certificate c;
    c.kind = CertificateKind::group_match;
    if (!matches(ray, entropy_from_groups(lattice, *r), c.scale))
      throw std::logic_error("group search returned a non-matching realization");
    c.realization = std::move(r);
    c.route = "search";
    return c;
  }

  if (auto g = violation(lattice, h, Template::ingleton, budget)) {
    Certificate c;
    c.kind = CertificateKind::violation_witness;
    c.gap = std::move(g);
    c.outside_abelian = true;
    c.route = "ingleton";
    return c;
  }
  return unknown;
}

ShannonResult check_shannon(const Lattice& lattice, const Budget& budget) {
  ShannonResult out;
  DDOptions dd;
  dd.threads = budget.threads;
  dd.max_rays = budget.max_rays;
  out.rays = extreme_rays(build_constraints(lattice, ConstraintMode::reduced), dd);
  bool all_entropic = true;
  for (std::size_t i = 0; i < out.rays.rays.size(); ++i) {
    Certificate c = certify_ray(lattice, out.rays.rays[i], budget);
    if (!c.entropic()) {
      all_entropic = false;
      out.uncertified.push_back(i);
    }
    if (c.non_entropic() && !out.witness) out.witness = i;
    out.certificates.push_back(std::move(c));
  }
  out.verdict = all_entropic ? Verdict::shannon
                             : out.witness ? Verdict::non_shannon : Verdict::undecided;
  return out;
}

std::vector<ConjectureEntry> conjecture_report(const Lattice& lattice, const ShannonResult& result,
                                               const Budget& budget) {
  std::vector<ConjectureEntry> out;
  ScanOptions opts;
  opts.budget = budget.scan_assignments;
  opts.first_only = true;
  for (std::size_t i = 0; i < result.rays.rays.size(); ++i) {
    const RatVector h = to_rational(result.rays.rays[i]);
    ConjectureEntry e;
    e.ray = i;
    try {
      e.ingleton_holds = scan_quadruples(lattice, h, Template::ingleton, opts).empty();
      e.strong_union_holds = scan_quadruples(lattice, h, Template::strong_union, opts).empty();
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (!e.ingleton_holds || !e.strong_union_holds) continue;
    e.certificate = i < result.certificates.size() ? result.certificates[i]
                                                   : certify_ray(lattice, result.rays.rays[i], budget);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace shannon
