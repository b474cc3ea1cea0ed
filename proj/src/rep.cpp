#include "ctld/rep.hpp"

namespace ctld {

namespace {

// Inverse of the m x m matrix whose row i holds prod_{l > i+1}(T - xi_l).
ExactMatrix dot_basis_inverse(const RootList& roots, const Field& field) {
  const std::size_t m = static_cast<std::size_t>(roots.m);
  ExactMatrix B(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    auto cell = group_algebra_cell({static_cast<int>(i + 1)}, roots, field);
    for (auto& [w, c] : cell.terms) B.at(i, static_cast<std::size_t>(w[0])) = c;
  }
  return inverse(B);
}

}  // namespace

Scalar psi(const std::vector<int>& I, const RootList& roots, const Field& field) {
  auto c = group_algebra_cell(I, roots, field);
  auto sq = dot_multiply(c, c);
  auto inv = dot_basis_inverse(roots, field);
  Scalar out = field.zero();
  for (auto& [w, coef] : sq.terms) {
    Scalar v = coef;
    for (std::size_t j = 0; j < I.size(); ++j)
      v *= inv.at(static_cast<std::size_t>(w[j]), static_cast<std::size_t>(I[j] - 1));
    out += v;
  }
  return out;
}

Scalar psi_closed_form(const std::vector<int>& I, const RootList& roots, const Field& field) {
  Scalar out = field.one();
  for (int i : I)
    for (int l = i + 1; l <= roots.m; ++l) out *= roots[i] - roots[l];
  return out;
}

GramMatrix gram(const CellularBasis& basis, int cell, const EvalContext& ctx, int U, int V) {
  const auto& rows = basis.rows(cell);
  const std::size_t N = rows.size();
  std::vector<AlgebraElement> left, right;
  for (std::size_t s = 0; s < N; ++s) {
    left.push_back(basis.element(cell, U, static_cast<int>(s)));
    right.push_back(basis.element(cell, static_cast<int>(s), V));
  }
  ExactMatrix g(basis.field(), N, N);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t)
      g.at(s, t) = basis.coordinate(product(left[s], right[t], ctx), {cell, U, V});
  return GramMatrix{basis.cells().at(static_cast<std::size_t>(cell)), std::move(g)};
}

ExactMatrix cell_action(const CellularBasis& basis, int cell, const Diagram& a, const EvalContext& ctx) {
  const std::size_t N = basis.rows(cell).size();
  ExactMatrix r(basis.field(), N, N);
  AlgebraElement A = AlgebraElement::basis(basis.field(), a);
  for (std::size_t s = 0; s < N; ++s) {
    auto coords = basis.coordinates(product(A, basis.element(cell, static_cast<int>(s), 0), ctx));
    for (std::size_t u = 0; u < N; ++u) {
      auto it = coords.find({cell, static_cast<int>(u), 0});
      if (it != coords.end()) r.at(u, s) = it->second;
    }
  }
  return r;
}

bool radical_is_submodule(const CellularBasis& basis, int cell, const GramMatrix& g,
                          const std::vector<Diagram>& actions, const EvalContext& ctx) {
  auto rad = kernel(g.matrix);
  if (rad.empty()) return true;
  const std::size_t N = g.matrix.rows();
  for (auto& a : actions) {
    ExactMatrix r = cell_action(basis, cell, a, ctx);
    for (auto& x : rad) {
      std::vector<Scalar> y(N, basis.field().zero());
      for (std::size_t u = 0; u < N; ++u)
        for (std::size_t s = 0; s < N; ++s)
          if (!r.at(u, s).is_zero() && !x[s].is_zero()) y[u] += r.at(u, s) * x[s];
      for (std::size_t i = 0; i < N; ++i) {
        Scalar acc = basis.field().zero();
        for (std::size_t j = 0; j < N; ++j)
          if (!g.matrix.at(i, j).is_zero() && !y[j].is_zero()) acc += g.matrix.at(i, j) * y[j];
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t SimplesReport::simple_count() const {
  std::size_t c = 0;
  for (auto& e : entries) c += e.phi_nonzero;
  return c;
}

std::size_t SimplesReport::predicted_count() const {
  std::size_t c = 0;
  for (auto& e : entries) c += e.predicted;
  return c;
}

bool SimplesReport::matches_prediction() const { return mismatches().empty(); }

std::vector<CellIndex> SimplesReport::mismatches() const {
  std::vector<CellIndex> out;
  for (auto& e : entries)
    if (e.phi_nonzero != e.predicted) out.push_back(e.lambda);
  return out;
}

bool predicted_simple(const CellIndex& lambda, int n, int p_power, bool all_delta_zero) {
  for (int i : lambda.index)
    if (i % p_power != 0) return false;
  if (n % 2 == 1) return true;
  if (2 * lambda.k == n) return !all_delta_zero;
  return true;
}

SimplesReport simple_modules(const CellularBasis& basis, const EvalContext& ctx) {
  SimplesReport rep{basis.m(), basis.n(), {}};
  const bool zero = ctx.params.all_zero();
  for (std::size_t c = 0; c < basis.cells().size(); ++c) {
    auto g = gram(basis, static_cast<int>(c), ctx);
    std::size_t r = g.rank();
    rep.entries.push_back(SimpleEntry{g.lambda, g.matrix.rows(), r, r > 0,
                                      predicted_simple(g.lambda, basis.n(), basis.roots().p_power, zero),
                                      g.is_symmetric()});
  }
  return rep;
}

QhReport is_quasi_hereditary(const SimplesReport& simples, int p, int m, const EvalContext& ctx) {
  QhReport q{};
  q.lambda_size = simples.entries.size();
  for (auto& e : simples.entries) {
    q.lambda0_size += e.phi_nonzero;
    if (!e.phi_nonzero && !q.witness) q.witness = e.lambda;
  }
  q.computed = q.lambda_size == q.lambda0_size;
  const bool p_divides = p > 0 && m % p == 0;
  q.predicted = !p_divides && (simples.n % 2 == 1 || !ctx.params.all_zero());
  return q;
}

QhReport quotient_quasi_hereditary(const SimplesReport& simples, int p, int m) {
  QhReport q{};
  for (auto& e : simples.entries) {
    if (2 * e.lambda.k == simples.n) continue;
    ++q.lambda_size;
    q.lambda0_size += e.phi_nonzero;
    if (!e.phi_nonzero && !q.witness) q.witness = e.lambda;
  }
  q.computed = q.lambda_size == q.lambda0_size;
  q.predicted = !(p > 0 && m % p == 0);
  return q;
}

}  // namespace ctld
