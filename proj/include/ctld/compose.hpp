#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ctld/diagram.hpp"
#include "ctld/scalars.hpp"

namespace ctld {

// How closed cycles are turned into parameters.
//
// coefficient_formula (default): a cycle with i dots and no blob costs
// delta_i, a cycle with i >= 1 dots and one blob costs delta_i, and [0,1]
// cycles cost nothing, including blob cycles already present in the operands.
// Not associative unless delta_0 = 1: (e1b e1b) e1 = delta_0 x while
// e1b (e1b e1) = x.
//
// relations: every removed cycle with i dots costs delta_i, and when several
// blob cycles meet exactly one [0,1] cycle survives (the others cost delta_0).
// Associative, and equal to the formula whenever delta_0 = 1.
enum class LoopRule { relations, coefficient_formula };

LoopRule parse_loop_rule(std::string_view s);
std::string_view to_string(LoopRule r);

struct CompositionTrace {
  int m = 1;
  // loops[i][0]: cycles with i dots and no blob, loops[i][1]: with one blob.
  std::vector<std::array<int, 2>> loops;

  int total() const;
  bool operator==(const CompositionTrace&) const = default;
};

struct Piece {
  int factor;          // 0 = upper operand, 1 = lower operand
  std::size_t strand;  // index into that operand's strands()
  int sign;            // running sign applied to the piece's dots
};

struct CompositeStrand {
  Endpoint a, b;  // product endpoints; a is the reference end
  std::vector<Piece> pieces;
  int dots = 0;  // consolidated, reduced mod m
  bool blob = false;
};

struct TracedLoop {
  std::vector<Piece> pieces;
  int dots = 0;
  bool blob = false;
};

struct StackResult {
  std::vector<CompositeStrand> strands;
  std::vector<TracedLoop> loops;
  CompositionTrace trace;
};

StackResult stack_and_trace(const Diagram& upper, const Diagram& lower);
CompositionTrace loop_census(const Diagram& upper, const Diagram& lower);

// Parameter exponents and the normalized product diagram; independent of the
// actual parameter values so results can be cached across parameter sets.
struct DiagramProduct {
  std::vector<int> delta_exponents;  // size m
  Diagram diagram;
};

DiagramProduct compose(const Diagram& upper, const Diagram& lower, LoopRule rule = LoopRule::coefficient_formula);

std::pair<Scalar, Diagram> multiply_diagrams(const Diagram& upper, const Diagram& lower,
                                             const ParameterSet& params,
                                             LoopRule rule = LoopRule::coefficient_formula);

// Junction sign between consecutive pieces meeting at a shared interface
// point: -1 if the point is the left end of exactly one of two horizontal
// pieces, or the right end of a horizontal piece met by a vertical one.
int junction_sign(const Strand& prev, Endpoint at_prev, const Strand& next, Endpoint at_next);

// Process-wide tally of traced loops whose junction-sign product was not +1.
struct JunctionStats {
  std::uint64_t loops = 0;
  std::uint64_t violations = 0;
};
JunctionStats junction_stats();
void reset_junction_stats();

}  // namespace ctld
