#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ctld/compose.hpp"
#include "ctld/diagram.hpp"
#include "ctld/scalars.hpp"

namespace ctld {

// Parameters and cycle rule used when multiplying.
struct EvalContext {
  ParameterSet params;
  LoopRule rule = LoopRule::coefficient_formula;

  const Field& field() const { return params.field(); }
  int m() const { return params.m(); }
};

class AlgebraElement {
 public:
  AlgebraElement(const Field& field, int n, int m);
  static AlgebraElement basis(const Field& field, const Diagram& d);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Diagram& d) const;

  // Adds c * d, dropping the entry if it cancels.
  void add_term(const Diagram& d, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  bool operator==(const AlgebraElement& o) const;

 private:
  void check(const AlgebraElement& o) const;
  Field field_;
  int n_, m_;
  std::map<Diagram, Scalar> terms_;
};

AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y, const EvalContext& ctx);
AlgebraElement flip(const AlgebraElement& x);

struct EBar1 {};
struct E {
  int i;
};
struct T {
  int i;
};
struct Identity {};
using GeneratorName = std::variant<EBar1, E, T, Identity>;

std::string to_string(const GeneratorName& g);
Diagram generator_diagram(const GeneratorName& g, int n, int m);
AlgebraElement generator(const GeneratorName& g, const Field& field, int n, int m);

struct RelationCheck {
  std::string relation;
  bool pass;
};

struct RelationReport {
  int n;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

// Checks the type D Temperley-Lieb presentation at m = 1 with delta_0 = delta:
// squares, commutation of unlinked pairs and braid-like relations of linked
// pairs in the Dynkin diagram 1bar-2, 1-2, 2-3-...-(n-1).
RelationReport verify_tl_d_relations(int n, const Field& field, const Scalar& delta,
                                     LoopRule rule = LoopRule::coefficient_formula);

// Number of basis diagrams reachable as products of the given generators
// (the span dimension when no product collapses to zero).
std::size_t closure_dimension(const std::vector<GeneratorName>& gens, int n, const EvalContext& ctx);

}  // namespace ctld
