#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctld/algebra.hpp"
#include "ctld/cellular.hpp"
#include "ctld/scalars.hpp"

namespace ctld {

// C^I C^I = psi_I C^I modulo strictly smaller indices in the dot algebra.
Scalar psi(const std::vector<int>& I, const RootList& roots, const Field& field);
// Closed form prod_j prod_{l > i_j} (xi_{i_j} - xi_l).
Scalar psi_closed_form(const std::vector<int>& I, const RootList& roots, const Field& field);

struct GramMatrix {
  CellIndex lambda;
  ExactMatrix matrix;
  std::size_t rank() const { return ctld::rank(matrix); }
  bool is_symmetric() const { return matrix == matrix.transpose(); }
};

// Entries read off with the auxiliary pair (U, V); defaults to (first, first).
GramMatrix gram(const CellularBasis& basis, int cell, const EvalContext& ctx, int U = 0, int V = 0);

// Action of a on the cell module: column S holds r_a(., S).
ExactMatrix cell_action(const CellularBasis& basis, int cell, const Diagram& a, const EvalContext& ctx);

// True if every action matrix maps the radical of the form into itself.
bool radical_is_submodule(const CellularBasis& basis, int cell, const GramMatrix& g,
                          const std::vector<Diagram>& actions, const EvalContext& ctx);

struct SimpleEntry {
  CellIndex lambda;
  std::size_t size;  // |M(lambda)|
  std::size_t rank;  // dim S(lambda) when nonzero
  bool phi_nonzero;
  bool predicted;
  bool symmetric;
};

struct SimplesReport {
  int m, n;
  std::vector<SimpleEntry> entries;
  std::size_t simple_count() const;
  std::size_t predicted_count() const;
  bool matches_prediction() const;
  std::vector<CellIndex> mismatches() const;
};

// Membership of lambda in the predicted set of the classification theorem
// (all index entries divisible by p^t; the k = n/2 cells only when n is odd
// or some delta_i is nonzero).
bool predicted_simple(const CellIndex& lambda, int n, int p_power, bool all_delta_zero);

SimplesReport simple_modules(const CellularBasis& basis, const EvalContext& ctx);

struct QhReport {
  bool computed;   // |Lambda| = |Lambda_0|
  bool predicted;  // closed form
  std::size_t lambda_size, lambda0_size;
  std::optional<CellIndex> witness;  // a lambda with zero form, if any
  bool agree() const { return computed == predicted; }
};

QhReport is_quasi_hereditary(const SimplesReport& simples, int p, int m, const EvalContext& ctx);
// Restricts to cells with k < n/2 (n even); predicted true when p does not
// divide m.
QhReport quotient_quasi_hereditary(const SimplesReport& simples, int p, int m);

}  // namespace ctld
