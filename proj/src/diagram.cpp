#include "ctld/diagram.hpp"

#include <algorithm>
#include <optional>

namespace ctld {

std::string Endpoint::to_string() const {
  return (edge == Edge::top ? "T" : "B") + std::to_string(pos);
}

Endpoint Endpoint::parse(std::string_view s) {
  if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B')) throw InvalidDiagram("bad endpoint: " + std::string(s));
  int v = 0;
  for (char ch : s.substr(1)) {
    if (ch < '0' || ch > '9') throw InvalidDiagram("bad endpoint: " + std::string(s));
    v = v * 10 + (ch - '0');
    if (v > kMaxN) throw InvalidDiagram("endpoint out of range: " + std::string(s));
  }
  return s[0] == 'T' ? top(v) : bottom(v);
}

namespace {

struct Span {
  int a, b;
};

// Exposure of arcs on one edge given the leftmost vertical position on that
// edge (if any).
std::vector<bool> exposed_spans(const std::vector<Span>& spans, std::optional<int> limit) {
  std::vector<bool> out(spans.size(), false);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (limit && spans[i].b > *limit) continue;
    bool nested = false;
    for (std::size_t j = 0; j < spans.size() && !nested; ++j)
      nested = j != i && spans[j].a < spans[i].a && spans[i].b < spans[j].b;
    out[i] = !nested;
  }
  return out;
}

// Position on the boundary circle: top 1..n, then bottom n..1.
int circle_pos(Endpoint e, int n) { return e.edge == Endpoint::Edge::top ? e.pos - 1 : 2 * n - e.pos; }

}  // namespace

Diagram::Diagram(int n, int m, std::vector<Strand> strands, bool blob_cycle)
    : n_(static_cast<std::uint8_t>(n)),
      m_(static_cast<std::uint8_t>(m)),
      blob_cycle_(blob_cycle),
      strands_(std::move(strands)) {
  if (n < 4) throw InvalidDiagram("n must be at least 4");
  if (n > kMaxN) throw InvalidDiagram("n too large");
  if (m < 1 || m > 255) throw InvalidDiagram("m out of range");
  if (strands_.size() != static_cast<std::size_t>(n)) throw InvalidDiagram("need exactly n strands");
  std::sort(strands_.begin(), strands_.end());
  owner_.fill(0xff);
  for (std::size_t i = 0; i < strands_.size(); ++i) {
    const Strand& s = strands_[i];
    if (!(s.a < s.b)) throw InvalidDiagram("strand ends not ordered");
    for (Endpoint e : {s.a, s.b}) {
      if (e.pos < 1 || e.pos > n) throw InvalidDiagram("endpoint out of range");
      auto& slot = owner_[static_cast<std::size_t>(endpoint_id(e, n))];
      if (slot != 0xff) throw InvalidDiagram("endpoint " + e.to_string() + " used twice");
      slot = static_cast<std::uint8_t>(i);
    }
    if (s.dots >= m) throw InvalidDiagram("dot count not reduced mod m");
  }
  for (std::size_t i = 0; i < strands_.size(); ++i) {
    int x1 = circle_pos(strands_[i].a, n), y1 = circle_pos(strands_[i].b, n);
    if (x1 > y1) std::swap(x1, y1);
    for (std::size_t j = i + 1; j < strands_.size(); ++j) {
      int x2 = circle_pos(strands_[j].a, n), y2 = circle_pos(strands_[j].b, n);
      if (x2 > y2) std::swap(x2, y2);
      if ((x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1))
        throw InvalidDiagram("strands cross");
    }
  }
  int blobs = blob_count();
  if (blob_cycle_) {
    if (blobs != 0) throw InvalidDiagram("type I diagram carries a strand blob");
    if (horizontal_count(Endpoint::Edge::top) == 0) throw InvalidDiagram("type I diagram needs a horizontal arc");
  } else if (blobs % 2 != 0) {
    throw InvalidDiagram("odd blob total");
  }
  if (blobs > 0) {
    auto exp = exposed_strands(*this);
    for (std::size_t i = 0; i < strands_.size(); ++i)
      if (strands_[i].blob && !exp[i]) throw InvalidDiagram("blob on an unexposed strand");
  }
}

int Diagram::horizontal_count(Endpoint::Edge edge) const {
  int c = 0;
  for (auto& s : strands_) c += s.horizontal() && s.a.edge == edge;
  return c;
}

int Diagram::blob_count() const {
  int c = 0;
  for (auto& s : strands_) c += s.blob;
  return c;
}

std::strong_ordering Diagram::operator<=>(const Diagram& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = m_ <=> o.m_; c != 0) return c;
  if (auto c = blob_cycle_ <=> o.blob_cycle_; c != 0) return c;
  return strands_ <=> o.strands_;
}

Diagram validate(const DiagramCandidate& c) {
  if (c.m < 1) throw InvalidDiagram("m must be positive");
  std::vector<Strand> out;
  out.reserve(c.strands.size());
  for (auto& s : c.strands) {
    Endpoint a = s.a, b = s.b;
    if (b < a) std::swap(a, b);
    long d = a.edge == b.edge ? s.dots - s.right_dots : s.dots + s.right_dots;
    d %= c.m;
    if (d < 0) d += c.m;
    long bl = s.blobs % 2;
    if (bl < 0) bl += 2;
    out.push_back(Strand{a, b, static_cast<std::uint8_t>(d), bl == 1});
  }
  return Diagram(c.n, c.m, std::move(out), c.blob_cycle);
}

std::vector<bool> exposed_strands(const Diagram& d) {
  const auto& st = d.strands();
  std::optional<std::size_t> lead;
  for (std::size_t i = 0; i < st.size(); ++i)
    if (st[i].vertical() && (!lead || st[i].a < st[*lead].a)) lead = i;
  std::vector<bool> out(st.size(), false);
  if (lead) out[*lead] = true;
  for (auto edge : {Endpoint::Edge::top, Endpoint::Edge::bottom}) {
    std::vector<Span> spans;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < st.size(); ++i)
      if (st[i].horizontal() && st[i].a.edge == edge) {
        spans.push_back({st[i].a.pos, st[i].b.pos});
        idx.push_back(i);
      }
    std::optional<int> limit;
    if (lead) limit = edge == Endpoint::Edge::top ? st[*lead].a.pos : st[*lead].b.pos;
    auto e = exposed_spans(spans, limit);
    for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]] = e[j];
  }
  return out;
}

Diagram flip(const Diagram& d) {
  auto swap_edge = [](Endpoint e) {
    e.edge = e.edge == Endpoint::Edge::top ? Endpoint::Edge::bottom : Endpoint::Edge::top;
    return e;
  };
  std::vector<Strand> out;
  out.reserve(d.strands().size());
  for (auto s : d.strands()) {
    Endpoint a = swap_edge(s.a), b = swap_edge(s.b);
    if (b < a) std::swap(a, b);
    // Mirroring top and bottom keeps left ends on the left, so dots stay put.
    out.push_back(Strand{a, b, s.dots, s.blob});
  }
  return Diagram(d.n(), d.m(), std::move(out), d.blob_cycle());
}

Diagram identity_diagram(int n, int m, const std::vector<int>& dots) {
  std::vector<Strand> st;
  for (int i = 1; i <= n; ++i) {
    int d = dots.empty() ? 0 : dots.at(static_cast<std::size_t>(i - 1));
    d %= m;
    if (d < 0) d += m;
    st.push_back(Strand{top(i), bottom(i), static_cast<std::uint8_t>(d), false});
  }
  return Diagram(n, m, std::move(st), false);
}

// ---------------------------------------------------------------- dangles

std::string to_string(DangleClass c) {
  switch (c) {
    case DangleClass::plus: return "plus";
    case DangleClass::minus: return "minus";
    case DangleClass::minus1: return "minus1";
    case DangleClass::minus2: return "minus2";
  }
  return "?";
}

DangleClass parse_dangle_class(std::string_view s) {
  if (s == "plus") return DangleClass::plus;
  if (s == "minus") return DangleClass::minus;
  if (s == "minus1") return DangleClass::minus1;
  if (s == "minus2") return DangleClass::minus2;
  throw InvalidDiagram("unknown dangle class: " + std::string(s));
}

Dangle::Dangle(int n, int m, std::vector<DangleArc> arcs, bool line_blob, bool blob_cycle)
    : n_(static_cast<std::uint8_t>(n)),
      m_(static_cast<std::uint8_t>(m)),
      blob_cycle_(blob_cycle),
      line_blob_(line_blob),
      arcs_(std::move(arcs)) {
  if (n < 1 || n > kMaxN) throw InvalidDiagram("dangle size out of range");
  if (m < 1 || m > 255) throw InvalidDiagram("m out of range");
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
  for (auto& a : arcs_) {
    if (a.a < 1 || a.b > n || a.a >= a.b) throw InvalidDiagram("bad dangle arc");
    if (a.dots >= m) throw InvalidDiagram("dot count not reduced mod m");
    if (used[a.a]++ || used[a.b]++) throw InvalidDiagram("dangle point used twice");
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    for (std::size_t j = 0; j < arcs_.size(); ++j) {
      auto& x = arcs_[i];
      auto& y = arcs_[j];
      if (x.a < y.a && y.a < x.b && x.b < y.b) throw InvalidDiagram("dangle arcs cross");
    }
  auto fp = free_points();
  for (int f : fp)
    for (auto& a : arcs_)
      if (a.a < f && f < a.b) throw InvalidDiagram("free line blocked by an arc");
  if (line_blob_ && fp.empty()) throw InvalidDiagram("line blob without a free line");
  int blobs = blob_count();
  if (blob_cycle_) {
    if (blobs) throw InvalidDiagram("type I dangle carries a blob");
    if (arcs_.empty()) throw InvalidDiagram("type I dangle needs an arc");
  } else if (2 * k() != n && blobs % 2) {
    throw InvalidDiagram("odd blob total");
  }
  if (blobs) {
    auto e = exposed_strands(*this);
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      if (arcs_[i].blob && !e.arcs[i]) throw InvalidDiagram("blob on an unexposed arc");
  }
}

std::vector<int> Dangle::free_points() const {
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (auto& a : arcs_) used[a.a] = used[a.b] = true;
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (!used[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

int Dangle::blob_count() const {
  int c = line_blob_;
  for (auto& a : arcs_) c += a.blob;
  return c;
}

DangleClass Dangle::dangle_class() const {
  if (blob_cycle_) return DangleClass::plus;
  if (2 * k() != n_) return DangleClass::minus;
  return blob_count() % 2 == 0 ? DangleClass::minus1 : DangleClass::minus2;
}

DangleExposure exposed_strands(const Dangle& v) {
  auto fp = v.free_points();
  std::vector<Span> spans;
  for (auto& a : v.arcs()) spans.push_back({a.a, a.b});
  std::optional<int> limit;
  if (!fp.empty()) limit = fp.front();
  return DangleExposure{exposed_spans(spans, limit), !fp.empty()};
}

}  // namespace ctld
