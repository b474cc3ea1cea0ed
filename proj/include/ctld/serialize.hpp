#pragma once

#include <json.hpp>

#include "ctld/algebra.hpp"
#include "ctld/cellular.hpp"
#include "ctld/diagram.hpp"
#include "ctld/enumerate.hpp"
#include "ctld/rep.hpp"
#include "ctld/scalars.hpp"

namespace ctld {

using Json = nlohmann::ordered_json;

// {"n":4,"m":2,"blobCycle":false,"strands":[{"ends":["T1","T2"],"dots":1,"blob":0},...]}
Json to_json(const Diagram& d);
// Accepts the same shape; ends in any order, optional "rightDots" on
// horizontal strands, dots and blobs reduced.
Diagram diagram_from_json(const Json& j);

// Arcs use "T<i>" ends, free lines a single "F<i>" end.
Json to_json(const Dangle& v);

// Coefficient strings, degree 0 upwards; [] is zero.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const Json& j);

// Sorted list of {"diagram":..., "scalar":...}.
Json to_json(const AlgebraElement& x);

Json to_json(const DiagramCensus& c);
Json to_json(const CountReport& r);
Json to_json(const RelationReport& r);
Json to_json(const CellDatumReport& r);
Json to_json(const GramMatrix& g);
Json to_json(const SimpleEntry& e);
Json to_json(const QhReport& q);

}  // namespace ctld
