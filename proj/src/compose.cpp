#include "ctld/compose.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace ctld {

namespace {

std::atomic<std::uint64_t> g_loops{0};
std::atomic<std::uint64_t> g_violations{0};

// Sign of a piece's own dot frame seen from one of its ends.
int end_sign(const Strand& s, Endpoint e) { return s.horizontal() && e == s.b ? -1 : 1; }

Endpoint other_end(const Strand& s, Endpoint e) { return e == s.a ? s.b : s.a; }

bool on_outer_boundary(int factor, Endpoint e) {
  return factor == 0 ? e.edge == Endpoint::Edge::top : e.edge == Endpoint::Edge::bottom;
}

// The same interface point seen from the other operand.
Endpoint across(int factor, Endpoint e) { return factor == 0 ? top(e.pos) : bottom(e.pos); }

struct Tracer {
  const Diagram* g[2];
  int n, m;
  std::array<std::array<bool, kMaxN>, 2> seen{};
  bool record;

  // Walk from an entry point until the path leaves through the outer boundary
  // or returns to the starting piece. Returns the exit endpoint (in operand
  // coordinates) and the factor it lies on.
  struct WalkResult {
    int factor;
    Endpoint exit;
    long dots;
    bool blob;
    int closing_sign;  // running sign after the closing junction (loops only)
  };

  WalkResult walk(int f, Endpoint entry, bool loop, std::vector<Piece>* pieces) {
    const int f0 = f;
    const std::size_t i0 = g[f]->strand_at(entry);
    std::size_t idx = i0;
    int sign = end_sign(g[f]->strands()[idx], entry);
    long dots = 0;
    bool blob = false;
    while (true) {
      const Strand& st = g[f]->strands()[idx];
      seen[static_cast<std::size_t>(f)][idx] = true;
      dots += sign * st.dots;
      blob ^= st.blob;
      if (pieces) pieces->push_back(Piece{f, idx, sign});
      Endpoint out = other_end(st, entry);
      if (!loop && on_outer_boundary(f, out)) return {f, out, dots, blob, sign};
      int nf = 1 - f;
      Endpoint in = across(f, out);
      std::size_t nidx = g[nf]->strand_at(in);
      sign *= junction_sign(st, out, g[nf]->strands()[nidx], in);
      if (loop && nf == f0 && nidx == i0) return {f, out, dots, blob, sign};
      f = nf;
      idx = nidx;
      entry = in;
    }
  }
};

Endpoint product_endpoint(int factor, Endpoint e) { return factor == 0 ? top(e.pos) : bottom(e.pos); }

void check_compatible(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("operands differ in n or m");
}

int reduce_mod(long v, int m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct RawTrace {
  std::vector<Strand> strands;
  CompositionTrace trace;
};

RawTrace trace(const Diagram& upper, const Diagram& lower, StackResult* detail) {
  check_compatible(upper, lower);
  const int n = upper.n(), m = upper.m();
  Tracer t{{&upper, &lower}, n, m, {}, detail != nullptr};
  RawTrace out;
  out.strands.reserve(static_cast<std::size_t>(n));
  out.trace.m = m;
  out.trace.loops.assign(static_cast<std::size_t>(m), {0, 0});
  std::array<bool, 2 * kMaxN> done{};
  // Boundary ids in order: a horizontal result is met at its left end and a
  // vertical one at its top end, which are the reference ends.
  for (int id = 0; id < 2 * n; ++id) {
    if (done[static_cast<std::size_t>(id)]) continue;
    int f = id < n ? 0 : 1;
    Endpoint start = id < n ? top(id + 1) : bottom(id - n + 1);
    std::vector<Piece>* pieces = nullptr;
    if (detail) {
      detail->strands.emplace_back();
      pieces = &detail->strands.back().pieces;
    }
    auto r = t.walk(f, start, false, pieces);
    Endpoint a = product_endpoint(f, start), b = product_endpoint(r.factor, r.exit);
    done[static_cast<std::size_t>(endpoint_id(b, n))] = true;
    int d = reduce_mod(r.dots, m);
    out.strands.push_back(Strand{a, b, static_cast<std::uint8_t>(d), r.blob});
    if (detail) {
      auto& cs = detail->strands.back();
      cs.a = a;
      cs.b = b;
      cs.dots = d;
      cs.blob = r.blob;
    }
  }
  // Anything left on the interface closes up. Scanning left to right meets
  // each loop first at its leftmost point, the left end of both arcs there.
  for (int x = 1; x <= n; ++x) {
    std::size_t idx = upper.strand_at(bottom(x));
    if (t.seen[0][idx]) continue;
    std::vector<Piece>* pieces = nullptr;
    if (detail) {
      detail->loops.emplace_back();
      pieces = &detail->loops.back().pieces;
    }
    auto r = t.walk(0, bottom(x), true, pieces);
    g_loops.fetch_add(1, std::memory_order_relaxed);
    if (r.closing_sign != 1) g_violations.fetch_add(1, std::memory_order_relaxed);
    int d = reduce_mod(r.dots, m);
    out.trace.loops[static_cast<std::size_t>(d)][r.blob ? 1 : 0] += 1;
    if (detail) {
      detail->loops.back().dots = d;
      detail->loops.back().blob = r.blob;
    }
  }
  return out;
}

}  // namespace

LoopRule parse_loop_rule(std::string_view s) {
  if (s == "relations") return LoopRule::relations;
  if (s == "formula" || s == "coefficient_formula") return LoopRule::coefficient_formula;
  throw std::invalid_argument("unknown loop rule: " + std::string(s));
}

std::string_view to_string(LoopRule r) {
  return r == LoopRule::relations ? "relations" : "formula";
}

int CompositionTrace::total() const {
  int t = 0;
  for (auto& l : loops) t += l[0] + l[1];
  return t;
}

int junction_sign(const Strand& prev, Endpoint at_prev, const Strand& next, Endpoint at_next) {
  return end_sign(prev, at_prev) * end_sign(next, at_next);
}

StackResult stack_and_trace(const Diagram& upper, const Diagram& lower) {
  StackResult out;
  auto raw = trace(upper, lower, &out);
  out.trace = raw.trace;
  return out;
}

CompositionTrace loop_census(const Diagram& upper, const Diagram& lower) {
  return trace(upper, lower, nullptr).trace;
}

DiagramProduct compose(const Diagram& upper, const Diagram& lower, LoopRule rule) {
  auto raw = trace(upper, lower, nullptr);
  const int m = upper.m();
  const auto& loops = raw.trace.loops;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  const int operand_cycles = int(upper.blob_cycle()) + int(lower.blob_cycle());
  bool blob_cycle = operand_cycles > 0;
  for (int i = 0; i < m; ++i) {
    const auto& l = loops[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(i)] += l[0];
    if (l[1] > 0) blob_cycle = true;
    if (rule == LoopRule::relations || i >= 1) e[static_cast<std::size_t>(i)] += l[1];
  }
  if (rule == LoopRule::relations) {
    // Every [0,1] cycle present, including those carried in by the operands,
    // costs delta_0 except one survivor. Cycles [i,1] with i >= 1 already paid
    // delta_i and leave a [0,1] cycle behind; since delta_i delta_0 = delta_i
    // the choice of survivor does not matter.
    const int zero_dot_blob_cycles = operand_cycles + loops[0][1];
    e[0] += operand_cycles;
    if (blob_cycle && zero_dot_blob_cycles > 0) e[0] -= 1;
  }
  if (blob_cycle)
    for (auto& s : raw.strands) s.blob = false;
  return DiagramProduct{std::move(e), Diagram(upper.n(), m, std::move(raw.strands), blob_cycle)};
}

std::pair<Scalar, Diagram> multiply_diagrams(const Diagram& upper, const Diagram& lower,
                                             const ParameterSet& params, LoopRule rule) {
  if (params.m() != upper.m()) throw std::invalid_argument("parameter count differs from m");
  auto p = compose(upper, lower, rule);
  return {params.monomial(p.delta_exponents), std::move(p.diagram)};
}

JunctionStats junction_stats() { return {g_loops.load(), g_violations.load()}; }

void reset_junction_stats() {
  g_loops = 0;
  g_violations = 0;
}

}  // namespace ctld
