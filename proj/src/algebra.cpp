#include "ctld/algebra.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace ctld {

AlgebraElement::AlgebraElement(const Field& field, int n, int m) : field_(field), n_(n), m_(m) {}

AlgebraElement AlgebraElement::basis(const Field& field, const Diagram& d) {
  AlgebraElement out(field, d.n(), d.m());
  out.terms_.emplace(d, field.one());
  return out;
}

Scalar AlgebraElement::coefficient(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? field_.zero() : it->second;
}

void AlgebraElement::add_term(const Diagram& d, const Scalar& c) {
  if (c.is_zero()) return;
  if (d.n() != n_ || d.m() != m_) throw std::invalid_argument("diagram size mismatch");
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check(const AlgebraElement& o) const {
  if (n_ != o.n_ || m_ != o.m_ || !(field_ == o.field_)) throw std::invalid_argument("algebra element mismatch");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check(o);
  for (auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check(o);
  for (auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return n_ == o.n_ && m_ == o.m_ && field_ == o.field_ && terms_ == o.terms_;
}

AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y, const EvalContext& ctx) {
  if (x.n() != y.n() || x.m() != y.m() || x.m() != ctx.m()) throw std::invalid_argument("product operand mismatch");
  AlgebraElement out(x.field(), x.n(), x.m());
  for (auto& [dx, cx] : x.terms())
    for (auto& [dy, cy] : y.terms()) {
      auto p = compose(dx, dy, ctx.rule);
      Scalar c = cx * cy * ctx.params.monomial(p.delta_exponents);
      out.add_term(p.diagram, c);
    }
  return out;
}

AlgebraElement flip(const AlgebraElement& x) {
  AlgebraElement out(x.field(), x.n(), x.m());
  for (auto& [d, c] : x.terms()) out.add_term(flip(d), c);
  return out;
}

std::string to_string(const GeneratorName& g) {
  if (std::holds_alternative<EBar1>(g)) return "e_1bar";
  if (auto* e = std::get_if<E>(&g)) return "e_" + std::to_string(e->i);
  if (auto* t = std::get_if<T>(&g)) return "T_" + std::to_string(t->i);
  return "1";
}

Diagram generator_diagram(const GeneratorName& g, int n, int m) {
  auto hook = [&](int i, bool blobs) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    std::vector<Strand> st;
    st.push_back(Strand{top(i), top(i + 1), 0, blobs});
    st.push_back(Strand{bottom(i), bottom(i + 1), 0, blobs});
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) st.push_back(Strand{top(j), bottom(j), 0, false});
    return Diagram(n, m, std::move(st), false);
  };
  if (std::holds_alternative<EBar1>(g)) return hook(1, true);
  if (auto* e = std::get_if<E>(&g)) return hook(e->i, false);
  if (auto* t = std::get_if<T>(&g)) {
    if (t->i < 1 || t->i > n) throw std::out_of_range("generator index out of range");
    std::vector<int> dots(static_cast<std::size_t>(n), 0);
    dots[static_cast<std::size_t>(t->i - 1)] = 1;
    return identity_diagram(n, m, dots);
  }
  return identity_diagram(n, m);
}

AlgebraElement generator(const GeneratorName& g, const Field& field, int n, int m) {
  return AlgebraElement::basis(field, generator_diagram(g, n, m));
}

bool RelationReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

RelationReport verify_tl_d_relations(int n, const Field& field, const Scalar& delta, LoopRule rule) {
  EvalContext ctx{validate_parameters(field, {delta}), rule};
  // Index 0 stands for 1bar; 1..n-1 for e_1..e_{n-1}.
  auto gen = [&](int i) -> GeneratorName { return i == 0 ? GeneratorName{EBar1{}} : GeneratorName{E{i}}; };
  auto name = [&](int i) { return i == 0 ? std::string("E_1bar") : "E_" + std::to_string(i); };
  auto linked = [](int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 2;
    if (i == 1) return j == 2;
    return j == i + 1;
  };
  RelationReport rep{n, {}};
  auto el = [&](int i) { return generator(gen(i), field, n, 1); };
  auto mul = [&](const AlgebraElement& a, const AlgebraElement& b) { return product(a, b, ctx); };
  for (int i = 0; i < n; ++i) {
    auto e = el(i);
    rep.checks.push_back({name(i) + "^2 = delta " + name(i), mul(e, e) == delta * e});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto a = el(i), b = el(j);
      if (linked(i, j)) {
        rep.checks.push_back({name(i) + name(j) + name(i) + " = " + name(i), mul(mul(a, b), a) == a});
      } else if (i < j) {
        rep.checks.push_back({name(i) + name(j) + " = " + name(j) + name(i), mul(a, b) == mul(b, a)});
      }
    }
  return rep;
}

std::size_t closure_dimension(const std::vector<GeneratorName>& gens, int n, const EvalContext& ctx) {
  const int m = ctx.m();
  std::vector<Diagram> g;
  for (auto& x : gens) g.push_back(generator_diagram(x, n, m));
  std::set<Diagram> seen;
  std::deque<Diagram> queue;
  for (auto& d : g)
    if (seen.insert(d).second) queue.push_back(d);
  while (!queue.empty()) {
    Diagram d = queue.front();
    queue.pop_front();
    for (auto& x : g) {
      auto [c, p] = multiply_diagrams(d, x, ctx.params, ctx.rule);
      if (c.is_zero()) continue;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen.size();
}

}  // namespace ctld
