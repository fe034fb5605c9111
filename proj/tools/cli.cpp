#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shannon/closure.hpp"
#include "shannon/cone.hpp"
#include "shannon/enumerate.hpp"
#include "shannon/error.hpp"
#include "shannon/inequalities.hpp"
#include "shannon/lattice.hpp"
#include "shannon/lattice_io.hpp"
#include "shannon/realizer.hpp"
#include "shannon/report.hpp"

namespace shannon::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  unsigned threads = 1;

  std::string file;
  std::string mode = "reduced";
  bool oracle = false;

  std::uint32_t budget_k = Budget{}.max_k;
  std::uint32_t budget_p = Budget{}.max_p;
  bool conjecture = false;

  std::string tmpl;
  std::string values;
  bool all = false;

  std::string name;
  std::vector<int> params;
  std::string output;

  std::size_t max_n = 0;
  std::string filter = "none";
  bool classify = false;
  std::string export_dir;

  std::string deps;
  std::size_t ray = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const Lattice& l, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + l.name(xs[i]);
  return s;
}

std::string ray_text(std::span<const Integer> ray) {
  std::string s;
  for (std::size_t i = 0; i < ray.size(); ++i) s += (i ? " " : "") + ray[i].get_str();
  return s;
}

std::string rational_list(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

Budget make_budget(const Options& o) {
  Budget b;
  b.max_k = o.budget_k;
  b.max_p = o.budget_p;
  b.threads = o.threads;
  return b;
}

std::vector<RatVector> read_values(const std::string& path, std::size_t size) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<RatVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream tokens(line);
    RatVector v;
    std::string t;
    while (tokens >> t) v.push_back(parse_rational(t));
    if (v.empty()) continue;
    if (v.size() != size)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(size) +
                       " values, got " + std::to_string(v.size()));
    out.push_back(std::move(v));
  }
  return out;
}

// The gap of the ray scaled to h(top) = 1; gaps are linear in h.
Rational normalized_gap(const Lattice& l, std::span<const Integer> ray, const GapReport& g) {
  Rational r = g.gap;
  if (ray[l.top()] != 0) r /= ray[l.top()];
  r.canonicalize();
  return r;
}

std::string gap_text(const Lattice& l, const GapReport& g) {
  return to_string(g.tmpl) + " at (" + join_names(l, g.assignment) + ") gap " + to_string(g.gap) +
         (g.violated ? " violated" : "");
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Lattice l = read_lat_file(o.file).lattice;
  LatticeProfile p = classify(l);
  if (o.json) {
    out << to_json(l, p).dump() << "\n";
    return kOk;
  }
  out << "size: " << l.size() << "\n"
      << "canonical: " << canonical_digest(l) << "\n"
      << "modular: " << yes_no(p.is_modular) << "\n"
      << "distributive: " << yes_no(p.is_distributive) << "\n"
      << "lower_locally_distributive: " << yes_no(p.is_lower_locally_distributive) << "\n"
      << "atomistic: " << yes_no(p.is_atomistic) << "\n"
      << "meet_irreducibles: " << join_names(l, p.meet_irreducibles) << "\n"
      << "join_irreducibles: " << join_names(l, p.join_irreducibles) << "\n"
      << "double_irreducibles: " << join_names(l, p.double_irreducibles) << "\n"
      << "order_dimension: "
      << (p.order_dimension ? std::to_string(*p.order_dimension) : std::string("n/a")) << "\n";
  return kOk;
}

int cmd_rays(const Options& o, std::ostream& out, std::ostream& err) {
  Lattice l = read_lat_file(o.file).lattice;
  ConstraintSystem sys = build_constraints(l, parse_mode(o.mode));
  DDOptions dd;
  dd.threads = o.threads;
  RaySet rays = extreme_rays(sys, dd);
  std::optional<bool> agrees;
  if (o.oracle) agrees = brute_force_rays(sys).rays == rays.rays;
  if (o.json) {
    json head{{"lattice", canonical_digest(l)}, {"mode", to_string(rays.mode)},
              {"count", rays.rays.size()}, {"rows", rays.rows_processed},
              {"max_intermediate", rays.max_intermediate}};
    if (agrees) head["oracle_agrees"] = *agrees;
    out << head.dump() << "\n";
    for (std::size_t i = 0; i < rays.rays.size(); ++i) {
      json r{{"ray", i}, {"values", ray_json(rays.rays[i])}};
      json norm = json::array();
      for (const auto& q : normalized(l, rays.rays[i])) norm.push_back(to_string(q));
      r["normalized"] = norm;
      out << r.dump() << "\n";
    }
  } else {
    out << format_ray_report(l, rays);
    if (agrees) out << "# oracle " << (*agrees ? "agrees" : "DISAGREES") << "\n";
  }
  if (agrees && !*agrees) {
    err << "error: brute-force oracle disagrees with the double description result\n";
    return kInternal;
  }
  return kOk;
}

void print_certificate(const Lattice& l, std::span<const Integer> ray, const Certificate& c,
                       std::ostream& out) {
  out << to_string(c.kind);
  if (!c.route.empty()) out << " via " << c.route;
  if (c.realization)
    out << ", Z_" << c.realization->p << "^" << c.realization->k << ", scale "
        << to_string(c.scale);
  if (c.gap)
    out << ", " << gap_text(l, *c.gap) << " (normalized " << to_string(normalized_gap(l, ray, *c.gap))
        << ")";
  if (c.outside_abelian) out << ", outside-abelian";
}

json certificate_json(const Lattice& l, std::span<const Integer> ray, const Certificate& c) {
  json j = to_json(l, c);
  if (c.gap) j["gap"]["normalized_gap"] = to_string(normalized_gap(l, ray, *c.gap));
  return j;
}

int cmd_check_shannon(const Options& o, std::ostream& out) {
  Lattice l = read_lat_file(o.file).lattice;
  Budget budget = make_budget(o);
  ShannonResult r = check_shannon(l, budget);
  if (o.json) {
    json head{{"lattice", canonical_digest(l)}, {"verdict", to_string(r.verdict)},
              {"rays", r.rays.rays.size()}, {"uncertified", r.uncertified}};
    if (r.witness) {
      head["witness"] = *r.witness;
      head["witness_ray"] = ray_json(r.rays.rays[*r.witness]);
      head["witness_gap"] = certificate_json(l, r.rays.rays[*r.witness],
                                             r.certificates[*r.witness])["gap"];
    }
    out << head.dump() << "\n";
    for (std::size_t i = 0; i < r.rays.rays.size(); ++i)
      out << json{{"ray", i},
                  {"values", ray_json(r.rays.rays[i])},
                  {"certificate", certificate_json(l, r.rays.rays[i], r.certificates[i])}}
                 .dump()
          << "\n";
  } else {
    out << "verdict: " << to_string(r.verdict) << "\n";
    out << "rays: " << r.rays.rays.size() << "\n";
    for (std::size_t i = 0; i < r.rays.rays.size(); ++i) {
      out << "ray " << i << ": " << ray_text(r.rays.rays[i]) << " -> ";
      print_certificate(l, r.rays.rays[i], r.certificates[i], out);
      out << "\n";
    }
    if (r.witness) {
      const auto& c = r.certificates[*r.witness];
      out << "witness: ray " << *r.witness << " (" << ray_text(r.rays.rays[*r.witness]) << "), "
          << gap_text(l, *c.gap) << ", normalized gap "
          << to_string(normalized_gap(l, r.rays.rays[*r.witness], *c.gap)) << "\n";
    }
    if (!r.uncertified.empty() && r.verdict == Verdict::undecided) {
      out << "uncertified:";
      for (std::size_t i : r.uncertified) out << " " << i;
      out << "\n";
    }
  }
  if (o.conjecture) {
    auto entries = conjecture_report(l, r, budget);
    for (const auto& e : entries) {
      if (o.json)
        out << json{{"conjecture_ray", e.ray},
                    {"certificate", to_string(e.certificate.kind)},
                    {"entropic", e.certificate.entropic()}}
                   .dump()
            << "\n";
      else
        out << "conjecture: ray " << e.ray << " satisfies ingleton and strong_union, certificate "
            << to_string(e.certificate.kind) << "\n";
    }
    if (!o.json) out << "conjecture: " << entries.size() << " rays listed (report only)\n";
  }
  return r.verdict == Verdict::non_shannon ? kFinding : kOk;
}

int cmd_inequality(const Options& o, std::ostream& out) {
  Template t = parse_template(o.tmpl);
  Lattice l = read_lat_file(o.file).lattice;
  auto rows = read_values(o.values, l.size());
  ScanOptions scan;
  bool any = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<GapReport> reports;
    if (o.all) {
      reports = scan_quadruples(l, rows[i], t, scan);
    } else {
      reports.push_back(minimum_gap(l, rows[i], t, scan));
    }
    for (const auto& g : reports) {
      any = any || g.violated;
      if (o.json) {
        json j = to_json(g);
        j["row"] = i;
        j["assignment_names"] = json::array();
        for (Element e : g.assignment) j["assignment_names"].push_back(l.name(e));
        out << j.dump() << "\n";
      } else {
        out << "row " << i << ": " << gap_text(l, g) << "\n";
      }
    }
    if (o.all && reports.empty() && !o.json) out << "row " << i << ": holds\n";
  }
  return any ? kFinding : kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  Lattice l = catalog(o.name, o.params);
  if (o.output.empty()) {
    write_lat(out, l);
    return kOk;
  }
  std::ofstream file(o.output);
  if (!file) throw ParseError("cannot write '" + o.output + "'");
  write_lat(file, l);
  if (o.json)
    out << json{{"name", o.name}, {"size", l.size()}, {"file", o.output},
                {"canonical", canonical_digest(l)}}
               .dump()
        << "\n";
  else
    out << "wrote " << o.output << " (" << l.size() << " elements)\n";
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  LatticeFilter filter = parse_filter(o.filter);
  if (!o.export_dir.empty()) {
    std::filesystem::create_directories(o.export_dir);
    std::map<std::size_t, std::size_t> seen;
    for (const auto& l : enumerate_lattices(o.max_n, filter)) {
      std::size_t i = seen[l.size()]++;
      std::ofstream file(std::filesystem::path(o.export_dir) /
                         ("lattice_" + std::to_string(l.size()) + "_" + std::to_string(i) + ".lat"));
      write_lat(file, l);
    }
  }
  if (!o.classify) {
    std::map<std::size_t, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& l : enumerate_lattices(o.max_n, filter)) {
      ++counts[l.size()];
      ++total;
    }
    if (o.json) {
      json c = json::object();
      for (auto [s, k] : counts) c[std::to_string(s)] = k;
      out << json{{"filter", to_string(filter)}, {"total", total}, {"counts_by_size", c}}.dump()
          << "\n";
    } else {
      for (auto [s, k] : counts) out << "size " << s << ": " << k << "\n";
      out << "total: " << total << "\n";
    }
    return kOk;
  }
  ClassificationReport r = classify_all(o.max_n, filter, make_budget(o));
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    for (auto [s, k] : r.counts_by_size) out << "size " << s << ": " << k << "\n";
    out << "total: " << r.total << "\n";
    for (const auto& [status, k] : r.histogram) out << status << ": " << k << "\n";
    for (const auto& f : r.flagged) {
      out << "flagged " << f.status << " size " << f.lattice.size() << " canonical "
          << f.canonical_hex;
      if (f.witness) out << " witness " << ray_text(*f.witness);
      out << "\n";
    }
  }
  return r.histogram.count("non_shannon") ? kFinding : kOk;
}

int cmd_fd_close(const Options& o, std::ostream& out) {
  LatFile lat = read_lat_file(o.file);
  const Lattice& l = lat.lattice;
  std::vector<Cover> base = lat.dependencies;
  if (!o.deps.empty()) {
    std::ifstream in(o.deps);
    if (!in) throw ParseError("cannot open '" + o.deps + "'");
    auto extra = parse_dependencies(in, l.size());
    base.insert(base.end(), extra.begin(), extra.end());
  }
  DependencyRelation closed_rel =
      armstrong_close(l, DependencyRelation::from_pairs(l.size(), base));
  ClosedLattice c = closed_lattice(l, closed_rel);
  if (o.json) {
    json cl = json::object();
    for (Element x = 0; x < l.size(); ++x) cl[l.name(x)] = l.name(c.closure.cl[x]);
    json closed = json::array();
    for (Element x : c.system.closed) closed.push_back(l.name(x));
    out << json{{"dependencies", closed_rel.pairs().size()},
                {"closure", cl},
                {"closed", closed},
                {"closed_canonical", canonical_digest(c.system.induced)}}
               .dump()
        << "\n";
  } else {
    out << "dependencies after closure: " << closed_rel.pairs().size() << "\n";
    for (Element x = 0; x < l.size(); ++x)
      out << "cl(" << l.name(x) << ") = " << l.name(c.closure.cl[x]) << "\n";
    out << "closed elements: " << join_names(l, c.system.closed) << "\n";
    out << "closed lattice:\n";
    write_lat(out, c.system.induced);
  }
  return kOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  Lattice l = read_lat_file(o.file).lattice;
  DDOptions dd;
  dd.threads = o.threads;
  RaySet rays = extreme_rays(build_constraints(l, ConstraintMode::reduced), dd);
  if (o.ray >= rays.rays.size())
    throw BadParams("ray index " + std::to_string(o.ray) + " out of range (" +
                    std::to_string(rays.rays.size()) + " rays)");
  const IntVector& ray = rays.rays[o.ray];
  Certificate c = certify_ray(l, ray, make_budget(o));
  if (o.json) {
    out << json{{"ray", o.ray}, {"values", ray_json(ray)}, {"certificate", certificate_json(l, ray, c)}}
               .dump()
        << "\n";
  } else {
    out << "ray " << o.ray << ": " << ray_text(ray) << "\n";
    out << "normalized: " << rational_list(normalized(l, ray)) << "\n";
    out << "certificate: ";
    print_certificate(l, ray, c, out);
    out << "\n";
    if (c.realization) {
      EntropyVector e = entropy_from_groups(l, *c.realization);
      out << "entropy (log " << e.log_base << " units): " << rational_list(e.exact) << "\n";
      for (Element x = 0; x < l.size(); ++x) {
        out << "  subgroup(" << l.name(x) << ") = span{";
        const auto& basis = c.realization->subgroup[x].basis();
        for (std::size_t b = 0; b < basis.size(); ++b) {
          out << (b ? ", " : "") << "(";
          for (std::size_t t = 0; t < basis[b].size(); ++t) out << (t ? " " : "") << basis[b][t];
          out << ")";
        }
        out << "}\n";
      }
    }
  }
  return c.non_entropic() ? kFinding : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polymatroid cones and entropy on finite lattices", "shannonlat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON lines");
  app.add_option("--threads", o.threads, "Worker threads for the cone engine")
      ->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Structural profile of a lattice");
  analyze->add_option("file", o.file, ".lat file")->required();

  auto* rays = app.add_subcommand("rays", "Extreme rays of the polymatroid cone");
  rays->add_option("file", o.file, ".lat file")->required();
  rays->add_option("--mode", o.mode, "full or reduced constraints")
      ->check(CLI::IsMember({"full", "reduced"}));
  rays->add_flag("--oracle", o.oracle, "Cross-check against the brute-force oracle");

  auto* check = app.add_subcommand("check-shannon", "Classify a lattice");
  check->add_option("file", o.file, ".lat file")->required();
  check->add_option("--budget-k", o.budget_k, "Largest group rank k in Z_p^k");
  check->add_option("--budget-p", o.budget_p, "Largest prime p");
  check->add_flag("--conjecture", o.conjecture, "List rays meeting ingleton and strong union");

  auto* ineq = app.add_subcommand("inequality", "Evaluate an inequality template");
  ineq->add_option("template", o.tmpl, "zy, ingleton or strong-union")
      ->required()
      ->check(CLI::IsMember({"zy", "zhang-yeung", "zhang_yeung", "ingleton", "strong-union",
                             "strong_union"}));
  ineq->add_option("file", o.file, ".lat file")->required();
  ineq->add_option("--values", o.values, "File with one vector per line")->required();
  ineq->add_flag("--all", o.all, "Report every violating assignment");

  auto* cat = app.add_subcommand("catalog", "Write a named lattice");
  cat->add_option("name", o.name, "Lattice name")->required();
  cat->add_option("params", o.params, "Integer parameters");
  cat->add_option("-o,--output", o.output, "Output .lat file");

  auto* en = app.add_subcommand("enumerate", "Enumerate lattices up to isomorphism");
  en->add_option("--max-n", o.max_n, "Largest size")->required();
  en->add_option("--filter", o.filter, "none, modular, distributive, lower_locally_distributive");
  en->add_flag("--classify", o.classify, "Run check-shannon on every lattice");
  en->add_option("--export", o.export_dir, "Directory for .lat exports");

  auto* fd = app.add_subcommand("fd", "Functional dependencies");
  fd->require_subcommand(1);
  auto* close = fd->add_subcommand("close", "Armstrong closure and closed lattice");
  close->add_option("file", o.file, ".lat file")->required();
  close->add_option("--deps", o.deps, "File with d <i> <j> lines");

  auto* realize = app.add_subcommand("realize", "Certificate for one extreme ray");
  realize->add_option("file", o.file, ".lat file")->required();
  realize->add_option("--ray", o.ray, "Ray index (reduced mode order)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*rays) return cmd_rays(o, out, err);
    if (*check) return cmd_check_shannon(o, out);
    if (*ineq) return cmd_inequality(o, out);
    if (*cat) return cmd_catalog(o, out);
    if (*en) return cmd_enumerate(o, out);
    if (*close) return cmd_fd_close(o, out);
    if (*realize) return cmd_realize(o, out);
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << app.help();
  return kInputError;
}

}  // namespace shannon::cli
