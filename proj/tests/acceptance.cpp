// Acceptance checks 1-11. `acceptance N` runs one criterion, `acceptance`
// runs all of them. Each criterion prints one PASS/FAIL line; lines starting
// with "  info:" are context only and never affect the verdict.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ctld/suites.hpp"

using namespace ctld;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool quiet = false;
void info(const std::string& s) {
  if (!quiet) std::cout << "  info: " << s << '\n';
}

EvalContext context(const Field& F, int m, const std::string& delta, LoopRule rule = LoopRule::coefficient_formula) {
  return EvalContext{parse_parameters(F, m, delta), rule};
}

std::string zeros(int m) {
  std::string s = "0";
  for (int i = 1; i < m; ++i) s += ",0";
  return s;
}

// ------------------------------------------------------------------ 1 - 3

void criterion1(Verdict& v) {
  auto t0 = Clock::now();
  auto c = census(enum_diagrams(1, 4), 1, 4);
  double t = seconds_since(t0);
  v.detail << "(1,4): " << c.total << "/" << c.type_one << "/" << c.type_two << " in " << t << "s";
  v.require(c.total == 48 && c.type_one == 13 && c.type_two == 35, "48/13/35");
  v.require(c.total == (4 + 3) * catalan(4) / 2 - 1, "((n+3)/2)C(n)-1");
  v.require(t < 1.0, "under 1 s");
}

void criterion2(Verdict& v) {
  auto t0 = Clock::now();
  auto c = census(enum_diagrams(2, 4), 2, 4);
  double t = seconds_since(t0);
  v.detail << "(2,4): " << c.total << "/" << c.type_one << "/" << c.type_two << " in " << t << "s;";
  v.require(c.total == 768 && c.type_one == 208 && c.type_two == 560, "768/208/560");
  v.require(t < 5.0, "(2,4) under 5 s");
  auto t1 = Clock::now();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {2, 6}}) {
    auto total = enum_diagrams(m, n).size();
    v.detail << " (" << m << "," << n << ")=" << total;
    v.require(total == expected_dimension(m, n), "formula at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  double t2 = seconds_since(t1);
  v.detail << " in " << t2 << "s";
  v.require(t2 < 120.0, "grid under 2 min");
}

void criterion3(Verdict& v) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {1, 6}}) {
    auto r = check_counts(m, n);
    v.detail << "(" << m << "," << n << "): " << r.checks.size() << " identities ";
    for (auto& c : r.checks)
      if (!c.pass()) v.require(false, c.identity + " " + std::to_string(c.lhs) + " != " + std::to_string(c.rhs));
  }
}

// ------------------------------------------------------------------ 4 - 7

struct AssocCase {
  int m, n;
  std::string field, delta;
  std::size_t samples;  // 0: exhaustive
};

std::vector<AssocCase> assoc_cases() {
  return {{1, 4, "Q", "1", 0},          {1, 4, "Q", "0", 0},           {2, 4, "Q(zeta_2)", "1,5", 500},
          {2, 4, "Q(zeta_2)", "0,0", 500}, {2, 5, "Q(zeta_2)", "1,5", 500}, {2, 5, "Q(zeta_2)", "0,0", 500},
          {3, 4, "Q(zeta_3)", "1,2,-1", 500}, {3, 4, "Q(zeta_3)", "0,0,0", 500}};
}

void criterion4(Verdict& v) {
  auto t0 = Clock::now();
  for (auto& c : assoc_cases()) {
    Field F(parse_field_spec(c.field));
    auto r = check_associativity(c.m, c.n, context(F, c.m, c.delta), 2024, c.samples);
    v.detail << " (" << c.m << "," << c.n << ") delta=(" << c.delta << "): " << r.failed << "/" << r.checked << " failed;";
    if (!r.pass()) {
      v.require(false, "associativity at (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") delta=(" + c.delta + ")");
      info("witness at delta=(" + c.delta + "): " + *r.witness);
    }
  }
  double t = seconds_since(t0);
  v.detail << " " << t << "s";
  v.require(t < 300.0, "under 5 min");
  // Same triples under the associative relations rule, for comparison.
  for (auto& c : assoc_cases()) {
    Field F(parse_field_spec(c.field));
    auto r = check_associativity(c.m, c.n, context(F, c.m, c.delta, LoopRule::relations), 2024, c.samples);
    info("relations rule (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") delta=(" + c.delta +
         "): " + std::to_string(r.failed) + "/" + std::to_string(r.checked) + " failed");
  }
}

void criterion5(Verdict& v) {
  Field Q(CyclotomicRationals{1});
  for (int n : {4, 5}) {
    auto r = verify_tl_d_relations(n, Q, Q.from_int(3));
    std::size_t bad = 0;
    for (auto& c : r.checks) {
      if (c.pass) continue;
      ++bad;
      v.require(false, c.relation);
    }
    v.detail << "n=" << n << ": " << r.checks.size() - bad << "/" << r.checks.size() << " relations; ";
    v.require(!r.checks.empty(), "relations checked");
  }
}

void criterion6(Verdict& v) {
  auto t0 = Clock::now();
  Field Q(CyclotomicRationals{2});
  CellularBasis B(2, 4, Q, roots_of_unity(Q, 2));
  auto r = verify_cell_datum(B, context(Q, 2, "1,0"), 6, 250);
  double t = seconds_since(t0);
  v.detail << "rank " << r.rank << "/" << r.dimension << ", C2 " << r.c2_checked - r.c2_failed << "/" << r.c2_checked << ", C3 "
           << r.c3_checked - r.c3_failed << "/" << r.c3_checked << ", " << t << "s";
  v.require(r.c1 && r.rank == 768, "C1");
  v.require(r.c2_failed == 0, "C2");
  v.require(r.c3_failed == 0 && r.c3_checked >= 200, "C3");
  v.require(t < 600.0, "under 10 min");
  for (auto& w : r.witnesses) info(w);
}

void criterion7(Verdict& v) {
  Field Q(CyclotomicRationals{2});
  for (std::string d : {"1,0", "0,0"}) {
    auto r = check_involution(2, 4, context(Q, 2, d), 77, 200);
    v.detail << "delta=(" << d << "): " << r.checked - r.failed << "/" << r.checked << "; ";
    v.require(r.pass(), "involution at delta=(" + d + ")");
  }
}

// ------------------------------------------------------------------ 8 - 10

struct SimplesCase {
  std::string field, delta;
  std::size_t expect;
};

void criterion8(Verdict& v) {
  for (auto& c : std::vector<SimplesCase>{{"Q(zeta_2)", "1,0", 27}, {"Q(zeta_2)", "0,0", 24}, {"GF(2)", "1,0", 6}, {"GF(2)", "0,0", 3}}) {
    Field F(parse_field_spec(c.field));
    CellularBasis B(2, 4, F, roots_of_unity(F, 2));
    auto s = simple_modules(B, context(F, 2, c.delta));
    v.detail << c.field << " (" << c.delta << "): " << s.simple_count() << "; ";
    v.require(s.simple_count() == c.expect, c.field + " (" + c.delta + ") expected " + std::to_string(c.expect));
    v.require(s.matches_prediction(), c.field + " (" + c.delta + ") closed-form set");
    for (auto& l : s.mismatches()) info(c.field + " (" + c.delta + ") mismatch at " + l.to_string());
    auto rel = simple_modules(B, context(F, 2, c.delta, LoopRule::relations));
    info("relations rule, " + c.field + " (" + c.delta + "): " + std::to_string(rel.simple_count()) + " simples");
  }
}

void criterion9(Verdict& v) {
  for (auto [field, delta] : std::vector<std::pair<std::string, std::string>>{
           {"Q(zeta_2)", "1,0"}, {"Q(zeta_2)", "0,0"}, {"Q(zeta_2)", "3,0"}, {"Q(zeta_2)", "1,2"}, {"GF(2)", "1,0"}, {"GF(2)", "0,0"}}) {
    Field F(parse_field_spec(field));
    CellularBasis B(2, 4, F, roots_of_unity(F, 2));
    auto r = check_gram_lemmas(B, context(F, 2, delta), 9, 1);
    v.detail << field << " (" << delta << "): " << r.lemma_checked - r.lemma_failed << "/" << r.lemma_checked << "; ";
    v.require(r.lemma_failed == 0, field + " (" + delta + ")");
    for (auto& l : r.lines) info(field + " (" + delta + ") " + l);
  }
}

// Field used for a (characteristic, m) grid point: Q(zeta_m) or the smallest
// GF(p^r) splitting x^m - 1.
Field grid_field(int p, int m) {
  if (p == 0) return Field(CyclotomicRationals{m});
  for (int r = 1;; ++r) {
    Field F(PrimePowerField{p, r});
    try {
      roots_of_unity(F, m);
      return F;
    } catch (const SplittingError&) {
    }
  }
}

std::vector<std::string> grid_deltas(const Field& F, int m) {
  auto lit = [&](const Scalar& x) {
    std::string s = "[";
    auto cs = x.to_coefficient_strings();
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ";" : "") + cs[i];
    return s + "]";
  };
  std::optional<Scalar> generic;
  if (F.characteristic() == 0)
    generic = F.from_int(3);
  else if (F.order() > 2)
    generic = F.element(2);
  std::vector<std::string> out;
  out.push_back("1" + zeros(m).substr(1));
  out.push_back(zeros(m));
  if (generic) out.push_back(lit(*generic) + zeros(m).substr(1));
  if (m >= 2) {
    std::string d = "1," + lit(generic ? *generic : F.one());
    for (int i = 2; i < m; ++i) d += ",0";
    out.push_back(d);
  }
  return out;
}

void criterion10(Verdict& v) {
  std::size_t points = 0, agree = 0;
  for (int m : {1, 2, 3})
    for (int n : {4, 5})
      for (int p : {0, 2, 3, 5}) {
        Field F = grid_field(p, m);
        RootList roots = roots_of_unity(F, m);
        CellularBasis B(m, n, F, roots);
        for (auto& d : grid_deltas(F, m)) {
          auto ctx = context(F, m, d);
          auto s = simple_modules(B, ctx);
          auto q = is_quasi_hereditary(s, p, m, ctx);
          std::string where = format_field_spec(F.spec()) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " delta=(" + d + ")";
          ++points;
          agree += q.agree();
          v.require(q.agree(), "qh " + where);
          if (!q.agree() && q.witness) info(where + " witness " + q.witness->to_string());
          if (n % 2 == 0) {
            auto qq = quotient_quasi_hereditary(s, p, m);
            ++points;
            agree += qq.agree();
            v.require(qq.agree(), "quotient " + where);
          }
          // Named cases.
          if (p == 0 && m == 2 && d == "0,0") {
            if (n == 5) v.require(q.computed, "(2,5) char 0 delta=0 is quasi-hereditary");
            if (n == 4) {
              v.require(!q.computed, "(2,4) char 0 delta=0 is not quasi-hereditary");
              v.require(quotient_quasi_hereditary(s, p, m).computed, "(2,4) char 0 delta=0 quotient is quasi-hereditary");
            }
          }
        }
      }
  v.detail << agree << "/" << points << " decisions agree with p not dividing m";
}

// ------------------------------------------------------------------ 11

void criterion11(Verdict& v);

const std::vector<std::function<void(Verdict&)>>& criteria() {
  static const std::vector<std::function<void(Verdict&)>> all{criterion1, criterion2, criterion3, criterion4,
                                                              criterion5, criterion6, criterion7, criterion8,
                                                              criterion9, criterion10, criterion11};
  return all;
}

void criterion11(Verdict& v) {
  reset_junction_stats();
  quiet = true;
  for (int i = 0; i < 6; ++i) {
    Verdict scratch;
    criteria()[static_cast<std::size_t>(i)](scratch);
  }
  quiet = false;
  auto js = junction_stats();
  v.detail << js.violations << " violations over " << js.loops << " traced loops in criteria 1-6";
  v.require(js.loops > 0, "loops were traced");
  v.require(js.violations == 0, "no junction-sign violations");
}

bool run(int i) {
  Verdict v;
  try {
    criteria()[static_cast<std::size_t>(i - 1)](v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << i << ": " << (v.pass ? "PASS" : "FAIL") << " - " << v.detail.str() << std::endl;
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [1-11]\n";
    return 2;
  }
  if (argc == 2) {
    int i = std::atoi(argv[1]);
    if (i < 1 || i > 11) {
      std::cerr << "criterion must be 1-11\n";
      return 2;
    }
    return run(i) ? 0 : 1;
  }
  bool all = true;
  for (int i = 1; i <= 11; ++i) all &= run(i);
  return all ? 0 : 1;
}
