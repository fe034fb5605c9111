#include "shannon/report.hpp"

#include <sstream>

namespace shannon {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json element_names(const Lattice& l, const std::vector<Element>& xs) {
  json a = json::array();
  for (Element x : xs) a.push_back(l.name(x));
  return a;
}

}  // namespace

json ray_json(std::span<const Integer> ray) {
  json a = json::array();
  for (const auto& z : ray) a.push_back(integer_json(z));
  return a;
}

json to_json(const Lattice& lattice, const LatticeProfile& p) {
  json j;
  j["size"] = lattice.size();
  j["canonical"] = canonical_digest(lattice);
  j["meet_irreducibles"] = element_names(lattice, p.meet_irreducibles);
  j["join_irreducibles"] = element_names(lattice, p.join_irreducibles);
  j["double_irreducibles"] = element_names(lattice, p.double_irreducibles);
  j["modular"] = p.is_modular;
  j["distributive"] = p.is_distributive;
  j["lower_locally_distributive"] = p.is_lower_locally_distributive;
  j["atomistic"] = p.is_atomistic;
  j["order_dimension"] = p.order_dimension ? json(*p.order_dimension) : json(nullptr);
  return j;
}

json to_json(const GapReport& r) {
  json j;
  j["template"] = to_string(r.tmpl);
  j["assignment"] = r.assignment;
  j["gap"] = to_string(r.gap);
  j["violated"] = r.violated;
  return j;
}

json to_json(const Lattice& lattice, const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["route"] = c.route;
  if (c.realization) {
    j["scale"] = to_string(c.scale);
    json g;
    g["p"] = c.realization->p;
    g["k"] = c.realization->k;
    json subs = json::object();
    for (Element x = 0; x < c.realization->subgroup.size(); ++x)
      subs[lattice.name(x)] = c.realization->subgroup[x].basis();
    g["subgroups"] = subs;
    j["group"] = g;
  }
  if (c.gap) {
    json gap = to_json(*c.gap);
    gap["assignment_names"] = element_names(lattice, c.gap->assignment);
    j["gap"] = gap;
  }
  if (c.outside_abelian) j["outside_abelian"] = true;
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["total"] = r.total;
  json counts = json::object();
  for (auto [size, count] : r.counts_by_size) counts[std::to_string(size)] = count;
  j["counts_by_size"] = counts;
  j["histogram"] = r.histogram;
  json flagged = json::array();
  for (const auto& f : r.flagged) {
    json e;
    e["size"] = f.lattice.size();
    e["canonical"] = f.canonical_hex;
    e["status"] = f.status;
    if (f.witness) e["witness"] = ray_json(*f.witness);
    json un = json::array();
    for (const auto& ray : f.uncertified) un.push_back(ray_json(ray));
    e["uncertified"] = un;
    flagged.push_back(e);
  }
  j["flagged"] = flagged;
  return j;
}

std::string format_ray_report(const Lattice& lattice, const RaySet& rays) {
  std::ostringstream out;
  out << "# lattice " << canonical_digest(lattice) << "\n";
  out << "# mode " << to_string(rays.mode) << "\n";
  out << "# rays " << rays.rays.size() << "\n";
  for (const auto& ray : rays.rays) {
    for (std::size_t i = 0; i < ray.size(); ++i) out << (i ? " " : "") << ray[i].get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace shannon
