#include "ctld/serialize.hpp"

#include <stdexcept>

namespace ctld {

Json to_json(const Diagram& d) {
  Json strands = Json::array();
  for (auto& s : d.strands())
    strands.push_back({{"ends", {s.a.to_string(), s.b.to_string()}}, {"dots", s.dots}, {"blob", s.blob ? 1 : 0}});
  return {{"n", d.n()}, {"m", d.m()}, {"blobCycle", d.blob_cycle()}, {"strands", std::move(strands)}};
}

Diagram diagram_from_json(const Json& j) {
  try {
    DiagramCandidate c;
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.blob_cycle = j.value("blobCycle", false);
    for (auto& s : j.at("strands")) {
      auto& ends = s.at("ends");
      if (ends.size() != 2) throw InvalidDiagram("a strand needs two ends");
      StrandSpec spec;
      spec.a = Endpoint::parse(ends[0].get<std::string>());
      spec.b = Endpoint::parse(ends[1].get<std::string>());
      spec.dots = s.value("dots", 0L);
      spec.right_dots = s.value("rightDots", 0L);
      spec.blobs = s.value("blob", 0L);
      c.strands.push_back(spec);
    }
    return validate(c);
  } catch (const Json::exception& e) {
    throw InvalidDiagram(std::string("malformed diagram JSON: ") + e.what());
  }
}

Json to_json(const Dangle& v) {
  Json strands = Json::array();
  for (auto& a : v.arcs())
    strands.push_back({{"ends", {top(a.a).to_string(), top(a.b).to_string()}}, {"dots", a.dots}, {"blob", a.blob ? 1 : 0}});
  auto free = v.free_points();
  for (std::size_t i = 0; i < free.size(); ++i)
    strands.push_back({{"ends", {"F" + std::to_string(free[i])}}, {"dots", 0}, {"blob", i == 0 && v.line_blob() ? 1 : 0}});
  return {{"n", v.n()},
          {"m", v.m()},
          {"k", v.k()},
          {"class", to_string(v.dangle_class())},
          {"blobCycle", v.blob_cycle()},
          {"strands", std::move(strands)}};
}

Json to_json(const Scalar& s) { return s.to_coefficient_strings(); }

Scalar scalar_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) throw FieldError("scalar must be a list of coefficient strings");
  std::vector<mpq_class> c;
  for (auto& e : j) {
    mpq_class q;
    if (q.set_str(e.is_string() ? e.get<std::string>() : e.dump(), 10) != 0) throw FieldError("bad coefficient " + e.dump());
    q.canonicalize();
    c.push_back(q);
  }
  return field.from_coefficients(std::move(c));
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (auto& [d, c] : x.terms()) out.push_back({{"diagram", to_json(d)}, {"scalar", to_json(c)}});
  return out;
}

Json to_json(const DiagramCensus& c) {
  Json classes = Json::array();
  for (auto& [key, count] : c.by_class)
    classes.push_back({{"k", key.k}, {"class", to_string(key.cls)}, {"count", count}});
  return {{"m", c.m}, {"n", c.n}, {"total", c.total}, {"typeI", c.type_one}, {"typeII", c.type_two}, {"byClass", classes}};
}

Json to_json(const CountReport& r) {
  Json checks = Json::array();
  for (auto& c : r.checks) checks.push_back({{"identity", c.identity}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass()}});
  return {{"m", r.m}, {"n", r.n}, {"census", to_json(r.census)}, {"checks", checks}, {"pass", r.all_pass()}};
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (auto& c : r.checks) checks.push_back({{"relation", c.relation}, {"pass", c.pass}});
  return {{"n", r.n}, {"checks", checks}, {"pass", r.all_pass()}};
}

Json to_json(const CellDatumReport& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"dimension", r.dimension},
          {"sumOfSquares", r.sum_of_squares},
          {"rank", r.rank},
          {"c1", r.c1},
          {"c2", {{"checked", r.c2_checked}, {"failed", r.c2_failed}}},
          {"c3", {{"checked", r.c3_checked}, {"failed", r.c3_failed}}},
          {"witnesses", r.witnesses},
          {"pass", r.pass()}};
}

Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.matrix.cols(); ++j) row.push_back(to_json(g.matrix.at(i, j)));
    rows.push_back(std::move(row));
  }
  auto r = g.rank();
  return {{"lambda", g.lambda.to_string()},
          {"size", g.matrix.rows()},
          {"rank", r},
          {"phi_nonzero", r > 0},
          {"symmetric", g.is_symmetric()},
          {"matrix", std::move(rows)}};
}

Json to_json(const SimpleEntry& e) {
  return {{"lambda", e.lambda.to_string()},
          {"size", e.size},
          {"rank", e.rank},
          {"phi_nonzero", e.phi_nonzero},
          {"predicted", e.predicted}};
}

Json to_json(const QhReport& q) {
  Json out = {{"computed", q.computed},
              {"predicted", q.predicted},
              {"lambda", q.lambda_size},
              {"lambda0", q.lambda0_size},
              {"agree", q.agree()}};
  out["witness"] = q.witness ? Json(q.witness->to_string()) : Json(nullptr);
  return out;
}

}  // namespace ctld
