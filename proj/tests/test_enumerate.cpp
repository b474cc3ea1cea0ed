#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "ctld/enumerate.hpp"

using namespace ctld;

namespace {

// Every partial matching of 1..n with k arcs by brute force, keeping those
// without crossings and without an arc over a free point.
std::set<PartialMatching> brute_force(int n, int k) {
  std::set<PartialMatching> out;
  std::vector<int> partner(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > n) {
      if (left) return;
      PartialMatching pm;
      for (int a = 1; a <= n; ++a)
        if (partner[a] > a) pm.emplace_back(a, partner[a]);
      for (auto [a, b] : pm) {
        for (int x = a + 1; x < b; ++x)
          if (partner[x] == 0 || partner[x] < a || partner[x] > b) return;
      }
      std::sort(pm.begin(), pm.end());
      out.insert(pm);
      return;
    }
    if (partner[i]) return rec(i + 1, left);
    rec(i + 1, left);  // free
    if (!left) return;
    for (int j = i + 1; j <= n; ++j)
      if (!partner[j]) {
        partner[i] = j;
        partner[j] = i;
        rec(i + 1, left - 1);
        partner[i] = partner[j] = 0;
      }
  };
  rec(1, k);
  return out;
}

std::set<PartialMatching> as_set(std::vector<PartialMatching> v) {
  for (auto& pm : v) std::sort(pm.begin(), pm.end());
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("noncrossing matchings examples") {
  CHECK(noncrossing_matchings(4, 1).size() == 3);
  CHECK(as_set(noncrossing_matchings(4, 2)) == std::set<PartialMatching>{{{1, 2}, {3, 4}}, {{1, 4}, {2, 3}}});
  CHECK(noncrossing_matchings(4, 0).size() == 1);
}

TEST_CASE("noncrossing matchings agree with brute force") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto got = noncrossing_matchings(n, k);
      CHECK(as_set(got).size() == got.size());
      CHECK(as_set(got) == brute_force(n, k));
    }
}

TEST_CASE("Catalan numbers count perfect noncrossing matchings") {
  for (int n = 1; n <= 7; ++n) CHECK(noncrossing_matchings(2 * n, n).size() == catalan(n));
  CHECK(catalan(5) == 42);
  CHECK(binomial(8, 4) == 70);
}

TEST_CASE("diagram counts") {
  auto c14 = census(enum_diagrams(1, 4), 1, 4);
  CHECK(c14.total == 48);
  CHECK(c14.type_one == 13);
  CHECK(c14.type_two == 35);
  auto c24 = census(enum_diagrams(2, 4), 2, 4);
  CHECK(c24.total == 768);
  CHECK(c24.type_one == 208);
  CHECK(c24.type_two == 560);
  CHECK(enum_diagrams(1, 5).size() == 167);
}

TEST_CASE("totals match m^n((n+3)/2 C(n) - 1)") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {2, 6}})
    CHECK(enum_diagrams(m, n).size() == expected_dimension(m, n));
  CHECK(expected_dimension(2, 4) == 768);
}

TEST_CASE("type counts at m = 1") {
  for (int n = 4; n <= 7; ++n) {
    auto c = census(enum_diagrams(1, n), 1, n);
    CHECK(c.type_one == catalan(n) - 1);
    CHECK(c.type_two == binomial(2 * n, n) / 2);
  }
}

TEST_CASE("no duplicates and sorted order") {
  auto ds = enum_diagrams(3, 4);
  CHECK(std::is_sorted(ds.begin(), ds.end()));
  CHECK(std::adjacent_find(ds.begin(), ds.end()) == ds.end());
}

TEST_CASE("dangle counts at m = 2, n = 4") {
  CHECK(enum_dangles(2, 4, 1, DangleClass::plus).size() == 6);
  CHECK(enum_dangles(2, 4, 1, DangleClass::minus).size() == 8);
  CHECK(enum_dangles(2, 4, 2, DangleClass::minus1).size() == 12);
  CHECK(enum_dangles(2, 4, 2, DangleClass::minus2).size() == 12);
  CHECK_THROWS(enum_dangles(2, 4, 0, DangleClass::plus));
  CHECK_THROWS(enum_dangles(2, 4, 1, DangleClass::minus1));
  CHECK_THROWS(enum_dangles(2, 4, 2, DangleClass::minus));
}

TEST_CASE("count identities") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {1, 6}, {3, 4}}) {
    auto r = check_counts(m, n);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(r.all_pass());
    for (auto& c : r.checks) {
      CAPTURE(c.identity);
      CHECK(c.pass());
    }
  }
  // 4 * 6^2 + 8^2 = 208 and 16 + 4 * 8^2 + 12^2 + 12^2 = 560
  CHECK(4 * 36 + 64 == 208);
  CHECK(16 + 4 * 64 + 144 + 144 == 560);
}

TEST_CASE("census is invariant under flip") {
  auto ds = enum_diagrams(2, 5);
  std::vector<Diagram> f;
  for (auto& d : ds) f.push_back(flip(d));
  auto a = census(ds, 2, 5), b = census(f, 2, 5);
  CHECK(a.by_class == b.by_class);
}

TEST_CASE("budget is enforced") { CHECK_THROWS_AS(enum_diagrams(4, 6, 1000), BudgetExceeded); }
