#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"
#include "shannon/rational.hpp"

namespace shannon {

enum class Template { zhang_yeung, ingleton, strong_union };
std::string to_string(Template t);
Template parse_template(const std::string& text);
std::size_t arity(Template t);

struct GapReport {
  Template tmpl = Template::zhang_yeung;
  std::vector<Element> assignment;
  Rational gap;  // right-hand side minus left-hand side
  bool violated = false;
};

/// I(X;Y|Z) = h(X v Z) + h(Y v Z) - h(X v Y v Z) - h(Z).
Rational conditional_mi(const Lattice& lattice, std::span<const Rational> h, Element x,
                        Element y, Element z);

/// zhang_yeung (A,B,C,D):
///   2 I(C;D) <= I(A;B) + I(A;C v D) + 3 I(C;D|A) + I(C;D|B)
/// ingleton (X,Y,Z,V,W):
///   I(X;Y|Z) <= I(X;Y|Z v V) + I(X;Y|Z v W) + I(V;W|Z)
/// strong_union (X,Y,Z,W):
///   I(X;Y|Z) <= I(X;Y|Z v W)
GapReport inequality_gap(const Lattice& lattice, std::span<const Rational> h, Template t,
                         std::span<const Element> assignment);

struct ScanOptions {
  std::uint64_t budget = 50'000'000;  // maximum number of assignments
  bool first_only = false;
};

/// Every violating assignment in lexicographic assignment order.
std::vector<GapReport> scan_quadruples(const Lattice& lattice, std::span<const Rational> h,
                                       Template t, const ScanOptions& options = {});

/// Minimum-gap assignment (lexicographically first among ties).
GapReport minimum_gap(const Lattice& lattice, std::span<const Rational> h, Template t,
                      const ScanOptions& options = {});

// Ternary relation (X _|_ Y | Z), dense over the lattice.
class IndependenceRelation {
 public:
  explicit IndependenceRelation(std::size_t size = 0)
      : size_(size), holds_(size * size * size, 0) {}

  std::size_t size() const { return size_; }
  bool holds(Element x, Element y, Element z) const {
    return holds_[(x * size_ + y) * size_ + z] != 0;
  }
  void set(Element x, Element y, Element z, bool value = true) {
    holds_[(x * size_ + y) * size_ + z] = value ? 1 : 0;
  }
  std::size_t count() const;

 private:
  std::size_t size_;
  std::vector<char> holds_;
};

/// All triples with conditional mutual information exactly zero.
IndependenceRelation induced_relation(const Lattice& lattice, std::span<const Rational> h);

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t failures = 0;
  std::vector<Element> witness;  // first failing instantiation
};

struct AxiomAudit {
  std::vector<AxiomResult> semi_graphoid;  // existence .. weak union
  std::vector<AxiomResult> derived;        // reflexivity .. autonomy
  std::vector<AxiomResult> flags;          // strong union, strong contraction

  bool semi_graphoid_ok() const;
  bool derived_ok() const;
  const AxiomResult* find(const std::string& name) const;
};

AxiomAudit audit_axioms(const Lattice& lattice, const IndependenceRelation& relation);

}  // namespace shannon
