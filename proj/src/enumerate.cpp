#include "ctld/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace ctld {

std::vector<PartialMatching> noncrossing_matchings(int n, int k) {
  std::vector<PartialMatching> out;
  if (k < 0 || 2 * k > n) return out;
  PartialMatching cur;
  std::vector<int> open;
  // At each point: leave it free (only when nothing is open), open an arc, or
  // close the innermost open arc.
  std::function<void(int)> rec = [&](int pos) {
    int arcs = static_cast<int>(cur.size() + open.size());
    if (pos > n) {
      if (open.empty() && static_cast<int>(cur.size()) == k) out.push_back(cur);
      return;
    }
    int remaining = n - pos + 1;
    if (static_cast<int>(open.size()) > remaining) return;
    if (open.empty()) rec(pos + 1);
    if (arcs < k) {
      open.push_back(pos);
      rec(pos + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      int a = open.back();
      open.pop_back();
      cur.emplace_back(a, pos);
      rec(pos + 1);
      cur.pop_back();
      open.push_back(a);
    }
  };
  rec(1);
  for (auto& pm : out) std::sort(pm.begin(), pm.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t expected_dimension(int m, int n) {
  std::uint64_t mn = 1;
  for (int i = 0; i < n; ++i) mn *= static_cast<std::uint64_t>(m);
  // (n+3)/2 C(n) = (n+3) C(n) / 2, always an integer.
  return mn * ((static_cast<std::uint64_t>(n + 3) * catalan(n)) / 2 - 1);
}

CensusKey census_key(const Diagram& d) {
  int k = d.horizontal_count(Endpoint::Edge::top);
  if (d.blob_cycle()) return {k, DangleClass::plus};
  if (2 * k != d.n()) return {k, DangleClass::minus};
  int top_blobs = 0;
  for (auto& s : d.strands()) top_blobs += s.blob && s.a.edge == Endpoint::Edge::top && s.horizontal();
  return {k, top_blobs % 2 == 0 ? DangleClass::minus1 : DangleClass::minus2};
}

namespace {

// Calls f(mask) for every subset of `choices` positions (bit i = choices[i]).
template <class F>
void for_each_subset(std::size_t count, F&& f) {
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) f(mask);
}

template <class F>
void for_each_word(std::size_t len, int m, F&& f) {
  std::vector<int> w(len, 0);
  while (true) {
    f(w);
    std::size_t i = 0;
    while (i < len && ++w[i] == m) w[i++] = 0;
    if (i == len) return;
  }
}

}  // namespace

std::vector<Diagram> enum_diagrams(int m, int n, std::uint64_t budget) {
  if (n < 4) throw InvalidDiagram("n must be at least 4");
  if (m < 1) throw InvalidDiagram("m must be positive");
  if (expected_dimension(m, n) > budget)
    throw BudgetExceeded("basis of size " + std::to_string(expected_dimension(m, n)) + " exceeds budget " +
                         std::to_string(budget));
  std::vector<Diagram> out;
  out.reserve(expected_dimension(m, n));
  for (int k = 0; 2 * k <= n; ++k) {
    auto pms = noncrossing_matchings(n, k);
    for (auto& tp : pms)
      for (auto& bp : pms) {
        std::vector<Strand> st;
        for (auto [a, b] : tp) st.push_back(Strand{top(a), top(b), 0, false});
        for (auto [a, b] : bp) st.push_back(Strand{bottom(a), bottom(b), 0, false});
        std::vector<int> tf, bf;
        {
          std::vector<bool> ut(static_cast<std::size_t>(n) + 1), ub(static_cast<std::size_t>(n) + 1);
          for (auto [a, b] : tp) ut[static_cast<std::size_t>(a)] = ut[static_cast<std::size_t>(b)] = true;
          for (auto [a, b] : bp) ub[static_cast<std::size_t>(a)] = ub[static_cast<std::size_t>(b)] = true;
          for (int i = 1; i <= n; ++i) {
            if (!ut[static_cast<std::size_t>(i)]) tf.push_back(i);
            if (!ub[static_cast<std::size_t>(i)]) bf.push_back(i);
          }
        }
        for (std::size_t j = 0; j < tf.size(); ++j) st.push_back(Strand{top(tf[j]), bottom(bf[j]), 0, false});
        Diagram plain(n, m, st, false);
        auto exp = exposed_strands(plain);
        std::vector<std::size_t> exposed;
        for (std::size_t i = 0; i < exp.size(); ++i)
          if (exp[i]) exposed.push_back(i);
        auto emit = [&](const std::vector<Strand>& base, bool cycle) {
          for_each_word(base.size(), m, [&](const std::vector<int>& w) {
            auto s = base;
            for (std::size_t i = 0; i < s.size(); ++i) s[i].dots = static_cast<std::uint8_t>(w[i]);
            out.emplace_back(n, m, std::move(s), cycle);
          });
        };
        const auto& base = plain.strands();
        for_each_subset(exposed.size(), [&](std::uint32_t mask) {
          if (__builtin_popcount(mask) % 2) return;
          auto s = base;
          for (std::size_t i = 0; i < exposed.size(); ++i)
            if (mask >> i & 1u) s[exposed[i]].blob = true;
          emit(s, false);
        });
        if (k >= 1) emit(base, true);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramCensus census(const std::vector<Diagram>& diagrams, int m, int n) {
  DiagramCensus c;
  c.m = m;
  c.n = n;
  for (auto& d : diagrams) {
    ++c.total;
    if (d.blob_cycle())
      ++c.type_one;
    else
      ++c.type_two;
    ++c.by_class[census_key(d)];
  }
  return c;
}

std::vector<Dangle> enum_dangles(int m, int n, int k, DangleClass cls) {
  const bool half = 2 * k == n;
  if (k < 0 || 2 * k > n) throw InvalidDiagram("dangle arc count out of range");
  if (cls == DangleClass::plus && k < 1) throw InvalidDiagram("plus dangles need k >= 1");
  if ((cls == DangleClass::minus1 || cls == DangleClass::minus2) && !half)
    throw InvalidDiagram("minus1/minus2 dangles need k = n/2");
  if (cls == DangleClass::minus && half) throw InvalidDiagram("minus dangles need k != n/2");
  std::vector<Dangle> out;
  for (auto& pm : noncrossing_matchings(n, k)) {
    std::vector<DangleArc> arcs;
    for (auto [a, b] : pm) arcs.push_back(DangleArc{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), 0, false});
    Dangle plain(n, m, arcs, false, false);
    auto exp = exposed_strands(plain);
    auto emit = [&](const std::vector<DangleArc>& base, bool line, bool cycle) {
      for_each_word(base.size(), m, [&](const std::vector<int>& w) {
        auto s = base;
        for (std::size_t i = 0; i < s.size(); ++i) s[i].dots = static_cast<std::uint8_t>(w[i]);
        out.emplace_back(n, m, std::move(s), line, cycle);
      });
    };
    if (cls == DangleClass::plus) {
      emit(plain.arcs(), false, true);
      continue;
    }
    std::vector<std::size_t> exposed;
    for (std::size_t i = 0; i < exp.arcs.size(); ++i)
      if (exp.arcs[i]) exposed.push_back(i);
    const std::size_t slots = exposed.size() + (exp.line ? 1 : 0);
    for_each_subset(slots, [&](std::uint32_t mask) {
      int parity = __builtin_popcount(mask) % 2;
      bool want_odd = cls == DangleClass::minus2;
      if (parity != int(want_odd)) return;
      auto s = plain.arcs();
      for (std::size_t i = 0; i < exposed.size(); ++i)
        if (mask >> i & 1u) s[exposed[i]].blob = true;
      bool line = exp.line && (mask >> exposed.size() & 1u);
      emit(s, line, false);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CountReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

CountReport check_counts(int m, int n, std::uint64_t budget) {
  CountReport rep{m, n, census(enum_diagrams(m, n, budget), m, n), {}};
  auto get = [&](int k, DangleClass c) {
    auto it = rep.census.by_class.find({k, c});
    return it == rep.census.by_class.end() ? std::uint64_t{0} : it->second;
  };
  auto mpow = [&](int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(m);
    return r;
  };
  auto tag = [&](const std::string& s, int k) { return s + "(" + std::to_string(n) + "," + std::to_string(k) + ")"; };
  for (int k = 1; 2 * k <= n; ++k) {
    std::uint64_t d = enum_dangles(m, n, k, DangleClass::plus).size();
    rep.checks.push_back({"|Q+" + tag("", k) + "| = m^(n-2k) |D+|^2", get(k, DangleClass::plus), mpow(n - 2 * k) * d * d});
  }
  for (int k = 0; 2 * k <= n; ++k) {
    if (2 * k == n) {
      for (auto c : {DangleClass::minus1, DangleClass::minus2}) {
        std::uint64_t d = enum_dangles(m, n, k, c).size();
        std::string i = c == DangleClass::minus1 ? "1" : "2";
        rep.checks.push_back({"|Q" + i + "-" + tag("", k) + "| = |D" + i + "-|^2", get(k, c), d * d});
      }
    } else {
      std::uint64_t d = enum_dangles(m, n, k, DangleClass::minus).size();
      rep.checks.push_back({"|Q-" + tag("", k) + "| = m^(n-2k) |D-|^2", get(k, DangleClass::minus), mpow(n - 2 * k) * d * d});
    }
  }
  rep.checks.push_back({"total = m^n((n+3)/2 C(n) - 1)", rep.census.total, expected_dimension(m, n)});
  if (m == 1) {
    rep.checks.push_back({"type I = C(n) - 1", rep.census.type_one, catalan(n) - 1});
    rep.checks.push_back({"type II = binomial(2n,n)/2", rep.census.type_two, binomial(2 * n, n) / 2});
  }
  return rep;
}

}  // namespace ctld
