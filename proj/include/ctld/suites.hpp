#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctld/algebra.hpp"
#include "ctld/cellular.hpp"
#include "ctld/rep.hpp"

namespace ctld {

// Outcome of a randomized or exhaustive check; `witness` describes the first
// failure.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> witness;
  bool pass() const { return failed == 0 && checked > 0; }
};

// (xy)z = x(yz) on basis triples: every triple when `samples` is 0, else
// `samples` seeded random triples.
SuiteReport check_associativity(int m, int n, const EvalContext& ctx, std::uint64_t seed, std::size_t samples,
                                std::uint64_t budget = kDefaultBudget);

// flip(xy) = flip(y) flip(x) on random pairs of random linear combinations.
SuiteReport check_involution(int m, int n, const EvalContext& ctx, std::uint64_t seed, std::size_t samples,
                             std::uint64_t budget = kDefaultBudget);

// Vanishing lemmas for every cell plus symmetry, independence from the
// auxiliary pair and closure of the radical:
//   phi of a k = n/2 minus cell is zero iff every delta_i is zero;
//   psi_I = 0 implies phi_(k,I) = 0;
//   psi_I != 0 implies phi_(k,I) != 0 when 2k != n.
struct GramLemmaReport {
  SuiteReport summary;
  // The three vanishing lemmas only, without the structural checks.
  std::size_t lemma_checked = 0, lemma_failed = 0;
  std::vector<std::string> lines;  // one per failed check
};
GramLemmaReport check_gram_lemmas(const CellularBasis& basis, const EvalContext& ctx, std::uint64_t seed,
                                  std::size_t samples);

}  // namespace ctld
