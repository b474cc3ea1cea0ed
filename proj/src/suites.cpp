#include "ctld/suites.hpp"

#include <random>

#include "ctld/enumerate.hpp"

namespace ctld {

namespace {

std::string describe(const Diagram& d) {
  std::string out = d.blob_cycle() ? "I{" : "II{";
  for (auto& s : d.strands()) {
    out += s.a.to_string() + "-" + s.b.to_string();
    if (s.dots) out += "." + std::to_string(s.dots);
    if (s.blob) out += "*";
    out += " ";
  }
  out.back() = '}';
  return out;
}

Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
  if (F.characteristic() == 0) {
    long v = static_cast<long>(rng() % 7) - 3;
    return F.from_int(v == 0 ? 1 : v);
  }
  std::uint64_t q = F.order();
  return F.element(1 + rng() % (q - 1));
}

AlgebraElement random_element(const std::vector<Diagram>& basis, const Field& F, std::mt19937_64& rng) {
  AlgebraElement x(F, basis.front().n(), basis.front().m());
  std::size_t terms = 1 + rng() % 3;
  for (std::size_t i = 0; i < terms; ++i) x.add_term(basis[rng() % basis.size()], random_scalar(F, rng));
  return x;
}

}  // namespace

SuiteReport check_associativity(int m, int n, const EvalContext& ctx, std::uint64_t seed, std::size_t samples,
                                std::uint64_t budget) {
  SuiteReport rep;
  rep.suite = "associativity";
  rep.seed = seed;
  auto basis = enum_diagrams(m, n, budget);
  const Field& F = ctx.field();
  auto one = [&](const Diagram& a, const Diagram& b, const Diagram& c) {
    auto A = AlgebraElement::basis(F, a), B = AlgebraElement::basis(F, b), C = AlgebraElement::basis(F, c);
    ++rep.checked;
    if (product(product(A, B, ctx), C, ctx) == product(A, product(B, C, ctx), ctx)) return;
    if (!rep.failed++) rep.witness = describe(a) + " * " + describe(b) + " * " + describe(c);
  };
  if (samples == 0) {
    for (auto& a : basis)
      for (auto& b : basis)
        for (auto& c : basis) one(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& a = basis[rng() % basis.size()];
      const auto& b = basis[rng() % basis.size()];
      const auto& c = basis[rng() % basis.size()];
      one(a, b, c);
    }
  }
  return rep;
}

SuiteReport check_involution(int m, int n, const EvalContext& ctx, std::uint64_t seed, std::size_t samples,
                             std::uint64_t budget) {
  SuiteReport rep;
  rep.suite = "involution";
  rep.seed = seed;
  auto basis = enum_diagrams(m, n, budget);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = random_element(basis, ctx.field(), rng);
    auto y = random_element(basis, ctx.field(), rng);
    ++rep.checked;
    if (flip(product(x, y, ctx)) == product(flip(y), flip(x), ctx)) continue;
    if (!rep.failed++) rep.witness = "pair " + std::to_string(i);
  }
  return rep;
}

GramLemmaReport check_gram_lemmas(const CellularBasis& basis, const EvalContext& ctx, std::uint64_t seed,
                                  std::size_t samples) {
  GramLemmaReport out;
  out.summary.suite = "gramlemmas";
  out.summary.seed = seed;
  auto& rep = out.summary;
  const Field& F = basis.field();
  const int n = basis.n();
  const bool zero = ctx.params.all_zero();
  std::mt19937_64 rng(seed);
  auto fail = [&](const std::string& what, bool lemma = false) {
    out.lemma_failed += lemma;
    ++rep.failed;
    if (!rep.witness) rep.witness = what;
    out.lines.push_back(what);
  };
  auto actions = enum_diagrams(basis.m(), n);
  for (std::size_t c = 0; c < basis.cells().size(); ++c) {
    const int cell = static_cast<int>(c);
    auto g = gram(basis, cell, ctx);
    const CellIndex& lam = g.lambda;
    const std::string name = lam.to_string();
    const bool phi = !g.matrix.is_zero();

    ++rep.checked;
    if (!g.is_symmetric()) fail(name + ": Gram matrix not symmetric");

    if (lam.kind == CellIndex::Kind::minus_half) {
      ++rep.checked;
      ++out.lemma_checked;
      if (phi == zero) fail(name + ": phi " + (phi ? "nonzero" : "zero") + " but all-zero delta is " + (zero ? "true" : "false"), true);
    } else {
      Scalar ps = psi(lam.index, basis.roots(), F);
      ++rep.checked;
      ++out.lemma_checked;
      if (ps.is_zero() && phi) fail(name + ": psi = 0 but phi != 0", true);
      if (2 * lam.k != n) {
        ++rep.checked;
        ++out.lemma_checked;
        if (!ps.is_zero() && !phi) fail(name + ": psi = " + ps.to_string() + " but phi = 0", true);
      }
    }

    const int size = static_cast<int>(basis.rows(cell).size());
    for (std::size_t i = 0; i < samples && size > 1; ++i) {
      int U = static_cast<int>(rng() % static_cast<std::uint64_t>(size));
      int V = static_cast<int>(rng() % static_cast<std::uint64_t>(size));
      ++rep.checked;
      if (!(gram(basis, cell, ctx, U, V).matrix == g.matrix))
        fail(name + ": form depends on (U,V) = (" + std::to_string(U) + "," + std::to_string(V) + ")");
    }

    ++rep.checked;
    if (!radical_is_submodule(basis, cell, g, actions, ctx)) fail(name + ": radical not stable");
  }
  return out;
}

}  // namespace ctld
