#pragma once

#include <iostream>
#include <string>

#include "json.hpp"
#include "turan/hypergraph.hpp"

namespace turan::cli {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", to_double(r)}};
}

inline Json vertex_set_json(const VertexSet& s) {
  Json arr = Json::array();
  s.for_each([&](int v) { arr.push_back(v); });
  return arr;
}

inline Json edges_json(const Hypergraph& h) {
  Json arr = Json::array();
  for (const auto& e : h.edges()) arr.push_back(vertex_set_json(e));
  return arr;
}

inline Json hypergraph_json(const Hypergraph& h) {
  return Json{{"uniformity", h.uniformity()},
              {"vertexCount", h.vertex_count()},
              {"edgeCount", h.size()},
              {"edges", edges_json(h)}};
}

}  // namespace turan::cli
