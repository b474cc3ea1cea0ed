#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctld {

inline constexpr int kMaxN = 32;

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Endpoint {
  enum class Edge : std::uint8_t { top = 0, bottom = 1 };
  Edge edge = Edge::top;
  std::uint8_t pos = 1;  // 1-based, left to right

  auto operator<=>(const Endpoint&) const = default;

  std::string to_string() const;             // "T3", "B1"
  static Endpoint parse(std::string_view s);  // inverse of to_string
};

inline Endpoint top(int i) { return {Endpoint::Edge::top, static_cast<std::uint8_t>(i)}; }
inline Endpoint bottom(int i) { return {Endpoint::Edge::bottom, static_cast<std::uint8_t>(i)}; }

// Dense id used by the tracer: top i -> i-1, bottom i -> n+i-1.
inline int endpoint_id(Endpoint e, int n) {
  return e.edge == Endpoint::Edge::top ? e.pos - 1 : n + e.pos - 1;
}
inline Endpoint endpoint_from_id(int id, int n) { return id < n ? top(id + 1) : bottom(id - n + 1); }

struct Strand {
  Endpoint a, b;  // a < b
  std::uint8_t dots = 0;  // left-endpoint count for horizontal strands
  bool blob = false;

  bool horizontal() const { return a.edge == b.edge; }
  bool vertical() const { return !horizontal(); }
  auto operator<=>(const Strand&) const = default;
};

enum class DiagramType { type_one, type_two };

// Input form before canonicalization. Ends may come in either order, dot
// counts may be any integer and right dots are accepted on horizontal arcs.
struct StrandSpec {
  Endpoint a, b;
  long dots = 0;        // left dots (horizontal) or plain dots (vertical)
  long right_dots = 0;  // horizontal only: right = m - left
  long blobs = 0;
};

struct DiagramCandidate {
  int n = 4;
  int m = 1;
  bool blob_cycle = false;
  std::vector<StrandSpec> strands;
};

class Diagram {
 public:
  // Strands must already be canonical (a < b, dots < m); throws InvalidDiagram
  // on any admissibility failure.
  Diagram(int n, int m, std::vector<Strand> strands, bool blob_cycle);

  int n() const { return n_; }
  int m() const { return m_; }
  bool blob_cycle() const { return blob_cycle_; }
  DiagramType type() const { return blob_cycle_ ? DiagramType::type_one : DiagramType::type_two; }
  const std::vector<Strand>& strands() const { return strands_; }

  // Index into strands() of the strand touching e.
  std::size_t strand_at(Endpoint e) const { return owner_[static_cast<std::size_t>(endpoint_id(e, n_))]; }
  std::size_t strand_at_id(int id) const { return owner_[static_cast<std::size_t>(id)]; }

  int horizontal_count(Endpoint::Edge edge) const;
  int blob_count() const;

  std::strong_ordering operator<=>(const Diagram& o) const;
  bool operator==(const Diagram& o) const { return (*this <=> o) == 0; }

 private:
  std::uint8_t n_, m_;
  bool blob_cycle_;
  std::vector<Strand> strands_;
  std::array<std::uint8_t, 2 * kMaxN> owner_{};
};

Diagram validate(const DiagramCandidate& candidate);

// Per-strand exposure flags in strands() order.
std::vector<bool> exposed_strands(const Diagram& d);
Diagram flip(const Diagram& d);
inline DiagramType classify(const Diagram& d) { return d.type(); }

// Identity pattern with the given dots on the vertical strands.
Diagram identity_diagram(int n, int m, const std::vector<int>& dots = {});

// ---------------------------------------------------------------- dangles

enum class DangleClass { plus, minus, minus1, minus2 };

std::string to_string(DangleClass c);
DangleClass parse_dangle_class(std::string_view s);

struct DangleArc {
  std::uint8_t a, b;  // positions, a < b
  std::uint8_t dots = 0;
  bool blob = false;
  auto operator<=>(const DangleArc&) const = default;
};

class Dangle {
 public:
  Dangle(int n, int m, std::vector<DangleArc> arcs, bool line_blob, bool blob_cycle);

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return static_cast<int>(arcs_.size()); }
  bool blob_cycle() const { return blob_cycle_; }
  bool line_blob() const { return line_blob_; }
  const std::vector<DangleArc>& arcs() const { return arcs_; }
  std::vector<int> free_points() const;
  int blob_count() const;
  DangleClass dangle_class() const;

  std::strong_ordering operator<=>(const Dangle& o) const = default;
  bool operator==(const Dangle& o) const = default;

 private:
  std::uint8_t n_, m_;
  bool blob_cycle_;
  bool line_blob_;
  std::vector<DangleArc> arcs_;
};

struct DangleExposure {
  std::vector<bool> arcs;  // per arc, in arcs() order
  bool line = false;       // leftmost free line (true whenever one exists)
};

DangleExposure exposed_strands(const Dangle& v);

}  // namespace ctld
