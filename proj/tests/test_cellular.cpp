#include <doctest.h>

#include <random>

#include "ctld/cellular.hpp"
#include "ctld/enumerate.hpp"

using namespace ctld;

namespace {

CellIndex plus(int k, std::vector<int> I) { return {CellIndex::Kind::plus, k, std::move(I), 0}; }
CellIndex minus(int k, std::vector<int> J) { return {CellIndex::Kind::minus, k, std::move(J), 0}; }
CellIndex half(int n, int i) { return {CellIndex::Kind::minus_half, n / 2, {}, i}; }

struct Rational2 {
  Field Q{CyclotomicRationals{2}};
  RootList roots = roots_of_unity(Q, 2);
};

}  // namespace

TEST_CASE("poset sizes") {
  CHECK(lambda_set(2, 4).size() == 27);
  CHECK(lambda_set(1, 4).size() == 6);
  CHECK(lambda_set(2, 5).size() == 52);
  CHECK(lambda_set(3, 4).size() == 9 + 1 + 2 + 9 + 81);
}

TEST_CASE("cell index text") {
  CHECK(plus(1, {2, 1}).to_string() == "(1,(2,1))+");
  CHECK(half(4, 1).to_string() == "(2,())_1-");
  CHECK(minus(0, {1, 1, 1, 1}).to_string() == "(0,(1,1,1,1))-");
}

TEST_CASE("order examples") {
  CHECK(leq(plus(1, {1, 1}), half(4, 1), 4));
  CHECK(leq(plus(1, {2, 1}), plus(1, {2, 2}), 4));
  CHECK(leq(plus(2, {}), plus(1, {1, 1}), 4));
  CHECK_FALSE(leq(plus(1, {1, 1}), plus(2, {}), 4));
  CHECK_FALSE(leq(half(4, 1), half(4, 2), 4));
  CHECK(leq(half(4, 2), minus(1, {1, 1}), 4));
  CHECK_FALSE(leq(plus(1, {1, 2}), plus(1, {2, 1}), 4));
}

TEST_CASE("order is a partial order listed topologically") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {1, 6}}) {
    auto L = lambda_set(m, n);
    for (std::size_t a = 0; a < L.size(); ++a) {
      CHECK(leq(L[a], L[a], n));
      for (std::size_t b = 0; b < L.size(); ++b) {
        if (a != b && leq(L[a], L[b], n)) {
          CHECK_FALSE(leq(L[b], L[a], n));
          CHECK(a < b);
        }
        for (std::size_t c = 0; c < L.size(); ++c)
          if (leq(L[a], L[b], n) && leq(L[b], L[c], n)) CHECK(leq(L[a], L[c], n));
      }
    }
  }
}

TEST_CASE("indexing set sizes") {
  CHECK(m_set(plus(1, {1, 2}), 2, 4).size() == 6);
  CHECK(m_set(minus(0, {2, 2, 2, 2}), 2, 4).size() == 1);
  CHECK(m_set(half(4, 1), 2, 4).size() == 12);
}

TEST_CASE("group algebra cells") {
  Rational2 R;
  auto id = group_algebra_cell({2, 2}, R.roots, R.Q);
  CHECK(id.terms.size() == 1);
  CHECK(id.terms.at({0, 0}).is_one());
  // (T1 - 1)(T2 - 1)
  auto c = group_algebra_cell({1, 1}, R.roots, R.Q);
  CHECK(c.terms.size() == 4);
  CHECK(c.terms.at({1, 1}) == R.Q.one());
  CHECK(c.terms.at({1, 0}) == R.Q.from_int(-1));
  CHECK(c.terms.at({0, 1}) == R.Q.from_int(-1));
  CHECK(c.terms.at({0, 0}) == R.Q.one());
  // T2 - 1
  auto d = group_algebra_cell({2, 1}, R.roots, R.Q);
  CHECK(d.terms.size() == 2);
  CHECK(d.terms.at({0, 1}) == R.Q.one());
  CHECK(d.terms.at({0, 0}) == R.Q.from_int(-1));
  auto full = to_algebra_element(group_algebra_cell({1, 1, 1, 2}, R.roots, R.Q), R.Q);
  CHECK(full.size() == 8);
  CHECK(full.coefficient(identity_diagram(4, 2, {1, 1, 1, 0})).is_one());
  CHECK(full.coefficient(identity_diagram(4, 2)) == R.Q.from_int(-1));
}

TEST_CASE("cut inverts glue") {
  std::mt19937_64 rng(53);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {2, 6}}) {
    for (auto& d : enum_diagrams(m, n)) {
      auto c = cut(d);
      CHECK(glue(c.upper, c.lower, c.omega) == d);
    }
  }
  for (int k = 1; k <= 2; ++k)
    for (auto cls : {DangleClass::plus, DangleClass::minus, DangleClass::minus1, DangleClass::minus2}) {
      if ((cls == DangleClass::minus1 || cls == DangleClass::minus2) != (k == 2)) continue;
      if (cls == DangleClass::minus && k == 2) continue;
      auto vs = enum_dangles(2, 4, k, cls);
      for (auto& a : vs)
        for (auto& b : vs) {
          std::vector<int> w(static_cast<std::size_t>(4 - 2 * k));
          for (auto& x : w) x = static_cast<int>(rng() % 2);
          auto c = cut(glue(a, b, w));
          CHECK(c.upper == a);
          CHECK(c.lower == b);
          CHECK(c.omega == w);
        }
    }
}

TEST_CASE("glue keeps the blob count even") {
  auto vs = enum_dangles(2, 4, 1, DangleClass::minus);
  for (auto& a : vs)
    for (auto& b : vs) {
      Diagram d = glue(a, b, {0, 0});
      CHECK(d.blob_count() % 2 == 0);
    }
  CHECK_THROWS(glue(vs[0], enum_dangles(2, 4, 1, DangleClass::plus)[0], {0, 0}));
  CHECK_THROWS(glue(vs[0], vs[0], {0}));
}

TEST_CASE("cellular elements") {
  Rational2 R;
  CellularBasis B(2, 4, R.Q, R.roots);
  CHECK(B.dimension() == 768);
  // (1,(2,1))-: glue(v1, v2, (0,1)) - xi_2 glue(v1, v2, (0,0))
  int c = B.cell_number(minus(1, {2, 1}));
  const auto& rows = B.rows(c);
  REQUIRE(rows.size() == 8);
  for (int s : {0, 3})
    for (int t : {1, 7}) {
      AlgebraElement want(R.Q, 4, 2);
      want.add_term(glue(rows[s].v, rows[t].v, {0, 1}), R.Q.one());
      want.add_term(glue(rows[s].v, rows[t].v, {0, 0}), -R.roots[2]);
      CHECK(B.element(c, s, t) == want);
    }
  int top = B.cell_number(minus(0, {2, 2, 2, 2}));
  CHECK(B.element(top, 0, 0) == AlgebraElement::basis(R.Q, identity_diagram(4, 2)));
  int h = B.cell_number(half(4, 1));
  for (int s = 0; s < 12; ++s) {
    auto e = B.element(h, s, (s + 5) % 12);
    REQUIRE(e.size() == 1);
    CHECK(e.terms().begin()->first.blob_count() % 2 == 0);
  }
}

TEST_CASE("coordinates recover every cellular element") {
  Field F(PrimePowerField{3, 1});
  CellularBasis B(2, 4, F, roots_of_unity(F, 2));
  for (int c = 0; c < static_cast<int>(B.cells().size()); ++c) {
    int size = static_cast<int>(B.rows(c).size());
    for (int s = 0; s < size; ++s)
      for (int t = 0; t < size; ++t) {
        auto x = B.coordinates(B.element(c, s, t));
        REQUIRE(x.size() == 1);
        CHECK(x.begin()->first == CellularBasis::Key{c, s, t});
        CHECK(x.begin()->second.is_one());
        CHECK(B.coordinate(B.element(c, s, t), {c, s, t}).is_one());
      }
  }
}

TEST_CASE("sum of squares is the dimension") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 4}, {1, 6}}) {
    Field Q(CyclotomicRationals{m});
    CellularBasis B(m, n, Q, roots_of_unity(Q, m));
    CHECK(B.dimension() == expected_dimension(m, n));
  }
}

TEST_CASE("cell datum at m = 1 with generic delta") {
  Field Q(CyclotomicRationals{1});
  CellularBasis B(1, 4, Q, roots_of_unity(Q, 1));
  EvalContext ctx{validate_parameters(Q, {Q.parse("7/3")})};
  auto rep = verify_cell_datum(B, ctx, 5, 300);
  CHECK(rep.rank == 48);
  CHECK(rep.pass());
}

TEST_CASE("cell datum at (2,4) over GF(3)") {
  Field F(PrimePowerField{3, 1});
  CellularBasis B(2, 4, F, roots_of_unity(F, 2));
  EvalContext ctx{validate_parameters(F, {F.one(), F.from_int(2)})};
  auto rep = verify_cell_datum(B, ctx, 9, 200);
  CHECK(rep.rank == 768);
  CHECK(rep.pass());
}

TEST_CASE("block rank agrees with the dense rank") {
  Field Q(CyclotomicRationals{2});
  CellularBasis B(2, 5, Q, roots_of_unity(Q, 2));
  CHECK(B.change_of_basis_rank(0) == B.change_of_basis_rank(1u << 20));
  CHECK(B.change_of_basis_rank() == expected_dimension(2, 5));
  Field G(PrimePowerField{2, 1});
  CellularBasis C(2, 4, G, roots_of_unity(G, 2));
  CHECK(C.change_of_basis_rank(0) == 768);
}

TEST_CASE("products of cellular elements stay below both indices") {
  std::mt19937_64 rng(59);
  Field Q(CyclotomicRationals{2});
  CellularBasis B(2, 4, Q, roots_of_unity(Q, 2));
  EvalContext ctx{validate_parameters(Q, {Q.one(), Q.zero()})};
  const int N = static_cast<int>(B.cells().size());
  for (int t = 0; t < 150; ++t) {
    int a = static_cast<int>(rng() % N), b = static_cast<int>(rng() % N);
    int sa = static_cast<int>(B.rows(a).size()), sb = static_cast<int>(B.rows(b).size());
    auto x = B.element(a, static_cast<int>(rng() % sa), static_cast<int>(rng() % sa));
    auto y = B.element(b, static_cast<int>(rng() % sb), static_cast<int>(rng() % sb));
    for (auto& [key, v] : B.coordinates(product(x, y, ctx))) CHECK((B.leq(key.cell, a) && B.leq(key.cell, b)));
  }
}
