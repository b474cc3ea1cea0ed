#include "ctld/cellular.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctld {

std::string CellIndex::to_string() const {
  std::ostringstream os;
  os << "(" << k << ",(";
  for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
  os << "))";
  switch (kind) {
    case Kind::plus: os << "+"; break;
    case Kind::minus: os << "-"; break;
    case Kind::minus_half: os << "_" << half << "-"; break;
  }
  return os.str();
}

DangleClass CellIndex::dangle_class() const {
  switch (kind) {
    case Kind::plus: return DangleClass::plus;
    case Kind::minus: return DangleClass::minus;
    case Kind::minus_half: return half == 1 ? DangleClass::minus1 : DangleClass::minus2;
  }
  return DangleClass::minus;
}

std::vector<std::vector<int>> index_tuples(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m) cur[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<CellIndex> lambda_set(int m, int n) {
  if (n < 4) throw InvalidDiagram("n must be at least 4");
  std::vector<CellIndex> out;
  const bool even = n % 2 == 0;
  for (int k = n / 2; k >= 1; --k)
    for (auto& I : index_tuples(m, n - 2 * k)) out.push_back({CellIndex::Kind::plus, k, I, 0});
  if (even) {
    out.push_back({CellIndex::Kind::minus_half, n / 2, {}, 1});
    out.push_back({CellIndex::Kind::minus_half, n / 2, {}, 2});
  }
  for (int k = even ? n / 2 - 1 : n / 2; k >= 0; --k)
    for (auto& J : index_tuples(m, n - 2 * k)) out.push_back({CellIndex::Kind::minus, k, J, 0});
  return out;
}

namespace {

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool leq(const CellIndex& a, const CellIndex& b, int n) {
  using K = CellIndex::Kind;
  (void)n;
  if (a == b) return true;
  if (a.kind == K::minus_half || b.kind == K::minus_half) {
    if (a.kind == K::minus_half && b.kind == K::minus_half) return false;
    if (b.kind == K::minus_half) return a.kind == K::plus;
    return b.kind == K::minus;  // a is a half cell
  }
  if (a.kind != b.kind) return a.kind == K::plus;
  if (a.k != b.k) return a.k > b.k;
  return componentwise_leq(a.index, b.index);
}

std::vector<CellRow> m_set(const CellIndex& lambda, int m, int n) {
  std::vector<CellRow> out;
  for (auto& v : enum_dangles(m, n, lambda.k, lambda.dangle_class())) out.push_back({v, lambda.index});
  return out;
}

DotPolynomial dot_multiply(const DotPolynomial& a, const DotPolynomial& b) {
  if (a.m != b.m || a.r != b.r) throw std::invalid_argument("dot polynomial mismatch");
  DotPolynomial out{a.m, a.r, {}};
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) {
      std::vector<int> w(wa.size());
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = (wa[j] + wb[j]) % a.m;
      Scalar c = ca * cb;
      auto [it, fresh] = out.terms.try_emplace(w, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

namespace {

// Coefficients of prod_{l = i+1}^{m} (T - xi_l) in powers of T (length m).
std::vector<Scalar> cell_polynomial(int i, const RootList& roots, const Field& field) {
  const int m = roots.m;
  std::vector<Scalar> p(static_cast<std::size_t>(m), field.zero());
  p[0] = field.one();
  int deg = 0;
  for (int l = i + 1; l <= m; ++l) {
    // p <- p * (T - xi_l)
    for (int e = deg + 1; e >= 0; --e) {
      Scalar v = field.zero();
      if (e >= 1) v += p[static_cast<std::size_t>(e - 1)];
      if (e <= deg) v -= roots[l] * p[static_cast<std::size_t>(e)];
      p[static_cast<std::size_t>(e)] = v;
    }
    ++deg;
  }
  return p;
}

}  // namespace

DotPolynomial group_algebra_cell(const std::vector<int>& I, const RootList& roots, const Field& field) {
  const int m = roots.m, r = static_cast<int>(I.size());
  DotPolynomial out{m, r, {}};
  out.terms.emplace(std::vector<int>(I.size(), 0), field.one());
  for (int j = 0; j < r; ++j) {
    auto poly = cell_polynomial(I[static_cast<std::size_t>(j)], roots, field);
    DotPolynomial f{m, r, {}};
    for (int e = 0; e < m; ++e) {
      if (poly[static_cast<std::size_t>(e)].is_zero()) continue;
      std::vector<int> w(I.size(), 0);
      w[static_cast<std::size_t>(j)] = e;
      f.terms.emplace(w, poly[static_cast<std::size_t>(e)]);
    }
    out = dot_multiply(out, f);
  }
  return out;
}

AlgebraElement to_algebra_element(const DotPolynomial& p, const Field& field) {
  AlgebraElement out(field, p.r, p.m);
  for (auto& [w, c] : p.terms) out.add_term(identity_diagram(p.r, p.m, w), c);
  return out;
}

Diagram glue(const Dangle& upper, const Dangle& lower, const std::vector<int>& omega) {
  if (upper.n() != lower.n() || upper.m() != lower.m() || upper.k() != lower.k() ||
      upper.blob_cycle() != lower.blob_cycle())
    throw InvalidDiagram("dangles do not match");
  if (upper.dangle_class() != lower.dangle_class()) throw InvalidDiagram("dangle classes differ");
  const int n = upper.n(), m = upper.m();
  auto fu = upper.free_points(), fl = lower.free_points();
  if (omega.size() != fu.size()) throw InvalidDiagram("dot word length differs from free line count");
  std::vector<Strand> st;
  for (auto& a : upper.arcs()) st.push_back(Strand{top(a.a), top(a.b), a.dots, a.blob});
  for (auto& a : lower.arcs()) st.push_back(Strand{bottom(a.a), bottom(a.b), a.dots, a.blob});
  for (std::size_t j = 0; j < fu.size(); ++j) {
    int w = omega[j];
    if (w < 0 || w >= m) throw InvalidDiagram("dot word entry out of range");
    bool blob = j == 0 && (upper.line_blob() != lower.line_blob());
    st.push_back(Strand{top(fu[j]), bottom(fl[j]), static_cast<std::uint8_t>(w), blob});
  }
  return Diagram(n, m, std::move(st), upper.blob_cycle());
}

CutResult cut(const Diagram& d) {
  std::vector<DangleArc> up, low;
  std::vector<int> omega;
  bool vertical_blob = false;
  int up_blobs = 0;
  for (auto& s : d.strands()) {
    if (s.horizontal()) {
      DangleArc a{s.a.pos, s.b.pos, s.dots, s.blob};
      if (s.a.edge == Endpoint::Edge::top) {
        up.push_back(a);
        up_blobs += s.blob;
      } else {
        low.push_back(a);
      }
    } else {
      omega.push_back(s.dots);  // strands are sorted by top end
      if (s.blob) vertical_blob = true;
    }
  }
  bool up_line = false, low_line = false;
  if (!d.blob_cycle() && !omega.empty()) {
    up_line = up_blobs % 2 == 1;
    low_line = up_line != vertical_blob;
  }
  return CutResult{Dangle(d.n(), d.m(), std::move(up), up_line, d.blob_cycle()),
                   Dangle(d.n(), d.m(), std::move(low), low_line, d.blob_cycle()), std::move(omega)};
}

// ------------------------------------------------------------ basis object

CellularBasis::CellularBasis(int m, int n, const Field& field, const RootList& roots)
    : m_(m), n_(n), field_(field), roots_(roots), cells_(lambda_set(m, n)) {
  if (roots.m != m) throw std::invalid_argument("root list has the wrong length");
  for (std::size_t i = 0; i < cells_.size(); ++i) cell_pos_[cells_[i]] = static_cast<int>(i);
  for (auto& c : cells_) {
    int f = family_number(c.k, c.dangle_class());
    if (f < 0) {
      Family fam{c.k, c.dangle_class(), enum_dangles(m, n, c.k, c.dangle_class()), {}};
      for (std::size_t i = 0; i < fam.dangles.size(); ++i) fam.position[fam.dangles[i]] = static_cast<int>(i);
      families_.push_back(std::move(fam));
      f = static_cast<int>(families_.size()) - 1;
    }
    cell_family_.push_back(f);
    std::vector<CellRow> rows;
    for (auto& v : families_[static_cast<std::size_t>(f)].dangles) rows.push_back({v, c.index});
    rows_.push_back(std::move(rows));
  }
  const std::size_t N = cells_.size();
  order_.assign(N * N, false);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) order_[a * N + b] = ctld::leq(cells_[a], cells_[b], n);
  ExactMatrix B(field, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    auto p = cell_polynomial(i, roots, field);
    for (int e = 0; e < m; ++e) B.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(e)) = p[static_cast<std::size_t>(e)];
  }
  ExactMatrix Bi = inverse(B);
  for (int i = 0; i < m; ++i) {
    basis_.emplace_back();
    inv_.emplace_back();
    for (int e = 0; e < m; ++e) {
      basis_.back().push_back(B.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e)));
      inv_.back().push_back(Bi.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e)));
    }
  }
}

int CellularBasis::family_number(int k, DangleClass cls) const {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].k == k && families_[i].cls == cls) return static_cast<int>(i);
  return -1;
}

const std::vector<CellRow>& CellularBasis::rows(int cell) const { return rows_.at(static_cast<std::size_t>(cell)); }

int CellularBasis::cell_number(const CellIndex& c) const {
  auto it = cell_pos_.find(c);
  if (it == cell_pos_.end()) throw std::out_of_range("unknown cell index " + c.to_string());
  return it->second;
}

std::uint64_t CellularBasis::dimension() const {
  std::uint64_t d = 0;
  for (auto& r : rows_) d += static_cast<std::uint64_t>(r.size()) * r.size();
  return d;
}

AlgebraElement CellularBasis::element(int cell, int s, int t) const {
  const auto& c = cells_.at(static_cast<std::size_t>(cell));
  const auto& rows = rows_.at(static_cast<std::size_t>(cell));
  const Dangle& up = rows.at(static_cast<std::size_t>(s)).v;
  const Dangle& low = rows.at(static_cast<std::size_t>(t)).v;
  AlgebraElement out(field_, n_, m_);
  const std::size_t r = c.index.size();
  std::vector<int> w(r, 0);
  while (true) {
    Scalar coef = field_.one();
    for (std::size_t j = 0; j < r && !coef.is_zero(); ++j)
      coef *= basis_[static_cast<std::size_t>(c.index[j] - 1)][static_cast<std::size_t>(w[j])];
    if (!coef.is_zero()) out.add_term(glue(up, low, w), coef);
    std::size_t j = 0;
    while (j < r && ++w[j] == m_) w[j++] = 0;
    if (j == r) break;
  }
  return out;
}

std::map<CellularBasis::Key, Scalar> CellularBasis::coordinates(const AlgebraElement& x) const {
  std::map<Key, Scalar> out;
  std::map<std::size_t, std::vector<std::vector<int>>> tuples;
  for (auto& [d, c] : x.terms()) {
    auto piece = cut(d);
    int f = family_number(piece.upper.k(), piece.upper.dangle_class());
    const Family& fam = families_.at(static_cast<std::size_t>(f));
    int s = fam.position.at(piece.upper), t = fam.position.at(piece.lower);
    const std::size_t r = piece.omega.size();
    auto& all = tuples[r];
    if (all.empty()) all = index_tuples(m_, static_cast<int>(r));
    for (auto& I : all) {
      Scalar coef = c;
      for (std::size_t j = 0; j < r && !coef.is_zero(); ++j)
        coef *= inv_[static_cast<std::size_t>(piece.omega[j])][static_cast<std::size_t>(I[j] - 1)];
      if (coef.is_zero()) continue;
      CellIndex ci;
      if (fam.cls == DangleClass::plus)
        ci = {CellIndex::Kind::plus, fam.k, I, 0};
      else if (fam.cls == DangleClass::minus)
        ci = {CellIndex::Kind::minus, fam.k, I, 0};
      else
        ci = {CellIndex::Kind::minus_half, fam.k, {}, fam.cls == DangleClass::minus1 ? 1 : 2};
      Key key{cell_number(ci), s, t};
      auto [it, fresh] = out.try_emplace(key, coef);
      if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Scalar CellularBasis::coordinate(const AlgebraElement& x, const Key& key) const {
  const auto& c = cells_.at(static_cast<std::size_t>(key.cell));
  const Family& fam = families_.at(static_cast<std::size_t>(cell_family_.at(static_cast<std::size_t>(key.cell))));
  const Dangle& up = fam.dangles.at(static_cast<std::size_t>(key.s));
  const Dangle& low = fam.dangles.at(static_cast<std::size_t>(key.t));
  Scalar out = field_.zero();
  for (auto& [d, coef] : x.terms()) {
    if (d.blob_cycle() != up.blob_cycle() || d.horizontal_count(Endpoint::Edge::top) != fam.k) continue;
    auto piece = cut(d);
    if (!(piece.upper == up) || !(piece.lower == low)) continue;
    Scalar v = coef;
    for (std::size_t j = 0; j < piece.omega.size() && !v.is_zero(); ++j)
      v *= inv_[static_cast<std::size_t>(piece.omega[j])][static_cast<std::size_t>(c.index[j] - 1)];
    out += v;
  }
  return out;
}

std::size_t CellularBasis::change_of_basis_rank(std::size_t dense_limit) const {
  const std::uint64_t dim = dimension();
  if (dim <= dense_limit) {
    auto diagrams = enum_diagrams(m_, n_, dim);
    std::map<Diagram, std::size_t> col;
    for (std::size_t i = 0; i < diagrams.size(); ++i) col.emplace(diagrams[i], i);
    ExactMatrix M(field_, static_cast<std::size_t>(dim), diagrams.size());
    std::size_t row = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c)
      for (std::size_t s = 0; s < rows_[c].size(); ++s)
        for (std::size_t t = 0; t < rows_[c].size(); ++t, ++row) {
          auto e = element(static_cast<int>(c), static_cast<int>(s), static_cast<int>(t));
          for (auto& [d, v] : e.terms()) M.at(row, col.at(d)) = v;
        }
    return rank(M);
  }
  // Each skeleton block is the r-fold Kronecker power of the basis matrix.
  std::size_t total = 0;
  for (auto& fam : families_) {
    const int r = n_ - 2 * fam.k;
    std::size_t size = 1;
    for (int i = 0; i < r; ++i) size *= static_cast<std::size_t>(m_);
    ExactMatrix K(field_, size, size);
    auto tuples = index_tuples(m_, r);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        Scalar v = field_.one();
        std::size_t rem = b;
        for (int j = r - 1; j >= 0; --j) {
          auto e = rem % static_cast<std::size_t>(m_);
          rem /= static_cast<std::size_t>(m_);
          v *= basis_[static_cast<std::size_t>(tuples[a][static_cast<std::size_t>(j)] - 1)][e];
        }
        K.at(a, b) = v;
      }
    // The half cells index no dot word, one cellular element per dangle pair.
    std::size_t blocks = fam.dangles.size() * fam.dangles.size();
    total += blocks * rank(K);
  }
  return total;
}

CellDatumReport verify_cell_datum(const CellularBasis& basis, const EvalContext& ctx, std::uint64_t seed,
                                  std::size_t samples, std::uint64_t budget) {
  CellDatumReport rep;
  rep.m = basis.m();
  rep.n = basis.n();
  const Field& F = basis.field();
  auto diagrams = enum_diagrams(basis.m(), basis.n(), budget);
  rep.dimension = diagrams.size();
  rep.sum_of_squares = basis.dimension();
  rep.rank = basis.change_of_basis_rank();
  rep.c1 = rep.sum_of_squares == rep.dimension && rep.rank == rep.dimension;
  if (!rep.c1) rep.witnesses.push_back("C1: rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.dimension));

  const auto& cells = basis.cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const int size = static_cast<int>(basis.rows(static_cast<int>(c)).size());
    for (int s = 0; s < size; ++s)
      for (int t = 0; t < size; ++t) {
        ++rep.c2_checked;
        if (!(flip(basis.element(static_cast<int>(c), s, t)) == basis.element(static_cast<int>(c), t, s))) {
          ++rep.c2_failed;
          if (rep.witnesses.size() < 20)
            rep.witnesses.push_back("C2: " + cells[c].to_string() + " S=" + std::to_string(s) + " T=" + std::to_string(t));
        }
      }
  }

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  for (std::size_t i = 0; i < samples; ++i) {
    const Diagram& a = diagrams[pick(diagrams.size())];
    int cell = static_cast<int>(pick(cells.size()));
    // Prefer cells where T and T' can differ.
    for (int tries = 0; tries < 8 && basis.rows(cell).size() < 2; ++tries) cell = static_cast<int>(pick(cells.size()));
    const std::size_t size = basis.rows(cell).size();
    int S = static_cast<int>(pick(size)), T1 = static_cast<int>(pick(size)), T2 = static_cast<int>(pick(size));
    if (size > 1)
      while (T2 == T1) T2 = static_cast<int>(pick(size));
    AlgebraElement A = AlgebraElement::basis(F, a);
    auto x = basis.coordinates(product(A, basis.element(cell, S, T1), ctx));
    auto y = basis.coordinates(product(A, basis.element(cell, S, T2), ctx));
    bool ok = true;
    auto support_ok = [&](const std::map<CellularBasis::Key, Scalar>& z, int T) {
      for (auto& [key, v] : z) {
        if (key.cell == cell) {
          if (key.t != T) return false;
        } else if (!basis.leq(key.cell, cell)) {
          return false;
        }
      }
      return true;
    };
    ok = support_ok(x, T1) && support_ok(y, T2);
    for (int U = 0; U < static_cast<int>(size) && ok; ++U) {
      auto fx = x.find({cell, U, T1});
      auto fy = y.find({cell, U, T2});
      Scalar vx = fx == x.end() ? F.zero() : fx->second;
      Scalar vy = fy == y.end() ? F.zero() : fy->second;
      ok = vx == vy;
    }
    ++rep.c3_checked;
    if (!ok) {
      ++rep.c3_failed;
      if (rep.witnesses.size() < 40)
        rep.witnesses.push_back("C3: " + cells[static_cast<std::size_t>(cell)].to_string() + " S=" + std::to_string(S) +
                                " T=" + std::to_string(T1) + " T'=" + std::to_string(T2));
    }
  }
  return rep;
}

}  // namespace ctld
