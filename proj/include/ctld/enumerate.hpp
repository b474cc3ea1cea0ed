#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctld/diagram.hpp"

namespace ctld {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 50000;

using PartialMatching = std::vector<std::pair<int, int>>;  // arcs (a < b), 1-based

// Noncrossing partial matchings of 1..n with k arcs whose free points are not
// covered by any arc, in a fixed deterministic order.
std::vector<PartialMatching> noncrossing_matchings(int n, int k);

std::uint64_t catalan(int n);
std::uint64_t binomial(int n, int k);
// m^n ((n+3)/2 C(n) - 1)
std::uint64_t expected_dimension(int m, int n);

struct CensusKey {
  int k;
  DangleClass cls;  // plus = type I; minus1/minus2 only at k = n/2
  auto operator<=>(const CensusKey&) const = default;
};

struct DiagramCensus {
  int m = 1, n = 4;
  std::uint64_t total = 0, type_one = 0, type_two = 0;
  std::map<CensusKey, std::uint64_t> by_class;
};

// Class of a diagram within the Q sets: k = number of top arcs.
CensusKey census_key(const Diagram& d);

// All admissible diagrams, sorted by canonical key. Throws BudgetExceeded if
// the predicted size exceeds the budget.
std::vector<Diagram> enum_diagrams(int m, int n, std::uint64_t budget = kDefaultBudget);
DiagramCensus census(const std::vector<Diagram>& diagrams, int m, int n);

std::vector<Dangle> enum_dangles(int m, int n, int k, DangleClass cls);

struct CountCheck {
  std::string identity;
  std::uint64_t lhs, rhs;
  bool pass() const { return lhs == rhs; }
};

struct CountReport {
  int m, n;
  DiagramCensus census;
  std::vector<CountCheck> checks;
  bool all_pass() const;
};

CountReport check_counts(int m, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace ctld
