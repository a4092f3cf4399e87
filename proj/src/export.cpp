#include "subop/export.hpp"

#include <json.hpp>

#include <sstream>

namespace subop {

std::string to_dot(const SubtypingRelation& r) {
  std::ostringstream out;
  out << "digraph subtyping {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";

  for (const GroundType& t : r.carrier()) {
    std::string label = display(t);
    out << "  \"" << label << "\" [label=\"" << label << "\"];\n";
  }

  // One layer per rank; (rank, display) is the carrier order already.
  int current = -1;
  for (const GroundType& t : r.carrier()) {
    int rk = rank(t);
    if (rk != current) {
      if (current >= 0) out << " }\n";
      out << "  { rank=same;";
      current = rk;
    }
    out << " \"" << display(t) << "\";";
  }
  if (current >= 0) out << " }\n";

  for (const auto& [sub, sup] : r.hasse())
    out << "  \"" << display(r.carrier()[sub]) << "\" -> \""
        << display(r.carrier()[sup]) << "\";\n";

  out << "}\n";
  return out.str();
}

std::string to_json(const SubtypingRelation& r) {
  nlohmann::ordered_json doc;
  doc["iteration"] = r.iteration();

  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const GroundType& t = r.carrier()[i];
    types.push_back({{"id", i}, {"name", display(t)}, {"rank", rank(t)}});
  }
  doc["types"] = std::move(types);

  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [sub, sup] : r.hasse()) edges.push_back({sub, sup});
  doc["hasse_edges"] = std::move(edges);

  return doc.dump(2) + "\n";
}

}  // namespace subop
