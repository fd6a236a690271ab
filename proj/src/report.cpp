#include "stight/report.hpp"

#include "stight/tightness.hpp"

namespace stight {

nlohmann::ordered_json check_report(const Orientation& d) {
  const NeighbourhoodProfile p = profile(d);
  nlohmann::ordered_json j;
  j["n"] = d.order();
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
  j["arcs"] = arcs;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < d.order(); ++v) {
    const VertexProfile& r = p.at(v);
    nlohmann::ordered_json row;
    row["vertex"] = v;
    row["out1"] = r.out1;
    row["out2"] = r.out2;
    row["in1"] = r.in1;
    row["in2"] = r.in2;
    rows.push_back(row);
  }
  j["profile"] = rows;
  j["deficiencies"] = {{"seymour", p.seymour_deficiencies()},
                       {"sullivan", p.sullivan_deficiencies()}};
  j["flags"] = {{"seymour", is_seymour_orientation(d)},
                {"seymour_tight", is_seymour_tight(d)},
                {"sullivan_tight", is_sullivan_tight(d)},
                {"eulerian", is_eulerian(d)},
                {"strongly_connected", is_strongly_connected(d)}};
  return j;
}

}  // namespace stight
