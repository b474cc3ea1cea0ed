#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ctld/algebra.hpp"
#include "ctld/diagram.hpp"
#include "ctld/enumerate.hpp"
#include "ctld/scalars.hpp"

namespace ctld {

struct CellIndex {
  enum class Kind : std::uint8_t { plus, minus, minus_half };
  Kind kind = Kind::minus;
  int k = 0;
  std::vector<int> index;  // entries in 1..m; empty for minus_half
  int half = 0;            // 1 or 2 for minus_half

  auto operator<=>(const CellIndex&) const = default;
  std::string to_string() const;  // e.g. "(1,(2,1))+", "(2,())_1-"
  DangleClass dangle_class() const;
};

// Every tuple in {1..m}^r, lexicographically.
std::vector<std::vector<int>> index_tuples(int m, int r);

// Whole poset, listed in a topological order (lower elements first).
std::vector<CellIndex> lambda_set(int m, int n);
bool leq(const CellIndex& a, const CellIndex& b, int n);

struct CellRow {
  Dangle v;
  std::vector<int> index;
};

std::vector<CellRow> m_set(const CellIndex& lambda, int m, int n);

// Element of the group algebra of (Z/m)^r in the monomial basis T^w.
struct DotPolynomial {
  int m = 1;
  int r = 0;
  std::map<std::vector<int>, Scalar> terms;
};

DotPolynomial dot_multiply(const DotPolynomial& a, const DotPolynomial& b);
// prod_j prod_{l > i_j} (T_j - xi_l)
DotPolynomial group_algebra_cell(const std::vector<int>& I, const RootList& roots, const Field& field);
// Embeds an r-strand dot polynomial as dotted identity diagrams (needs r >= 4).
AlgebraElement to_algebra_element(const DotPolynomial& p, const Field& field);

Diagram glue(const Dangle& upper, const Dangle& lower, const std::vector<int>& omega);

struct CutResult {
  Dangle upper, lower;
  std::vector<int> omega;
};
CutResult cut(const Diagram& d);

// Cellular basis of the whole algebra together with coordinate extraction.
// Coordinates are computed skeleton by skeleton: every diagram sits over a
// unique pair of dangles, and on each such block the basis change is the
// r-fold tensor power of the m x m triangular matrix of the polynomials
// prod_{l > i}(T - xi_l).
class CellularBasis {
 public:
  struct Key {
    int cell;
    int s, t;
    auto operator<=>(const Key&) const = default;
  };

  CellularBasis(int m, int n, const Field& field, const RootList& roots);

  int m() const { return m_; }
  int n() const { return n_; }
  const Field& field() const { return field_; }
  const RootList& roots() const { return roots_; }
  const std::vector<CellIndex>& cells() const { return cells_; }
  const std::vector<CellRow>& rows(int cell) const;
  int cell_number(const CellIndex& c) const;
  bool leq(int a, int b) const { return order_[static_cast<std::size_t>(a) * cells_.size() + static_cast<std::size_t>(b)]; }
  std::uint64_t dimension() const;

  // C^lambda_{S,T}
  AlgebraElement element(int cell, int s, int t) const;
  std::map<Key, Scalar> coordinates(const AlgebraElement& x) const;
  Scalar coordinate(const AlgebraElement& x, const Key& key) const;

  // Rank of the matrix expressing all cellular elements in the diagram basis.
  // Dense up to `dense_limit`, otherwise block by block over skeletons.
  std::size_t change_of_basis_rank(std::size_t dense_limit = 2048) const;

 private:
  struct Family {
    int k;
    DangleClass cls;
    std::vector<Dangle> dangles;
    std::map<Dangle, int> position;
  };
  const Family& family_of(const CellIndex& c) const;
  int family_number(int k, DangleClass cls) const;

  int m_, n_;
  Field field_;
  RootList roots_;
  std::vector<CellIndex> cells_;
  std::map<CellIndex, int> cell_pos_;
  std::vector<Family> families_;
  std::vector<int> cell_family_;
  std::vector<std::vector<CellRow>> rows_;
  std::vector<bool> order_;
  // basis[i][e]: coefficient of T^e in prod_{l > i+1}(T - xi_l); inv = inverse.
  std::vector<std::vector<Scalar>> basis_, inv_;
};

struct CellDatumReport {
  int m, n;
  std::uint64_t dimension = 0;
  std::uint64_t sum_of_squares = 0;
  std::size_t rank = 0;
  bool c1 = false;
  std::size_t c2_checked = 0, c2_failed = 0;
  std::size_t c3_checked = 0, c3_failed = 0;
  std::vector<std::string> witnesses;
  bool pass() const { return c1 && c2_failed == 0 && c3_failed == 0 && c3_checked > 0; }
};

// (C1) independence, (C2) flip(C_{S,T}) = C_{T,S} on every element, (C3) on
// `samples` random (a, lambda, S, T, T') tuples.
CellDatumReport verify_cell_datum(const CellularBasis& basis, const EvalContext& ctx, std::uint64_t seed,
                                  std::size_t samples, std::uint64_t budget = kDefaultBudget);

}  // namespace ctld
