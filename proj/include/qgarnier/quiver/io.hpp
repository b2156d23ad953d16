#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "quiver.hpp"

namespace qgarnier {

inline nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.src, a.dst, a.multiplicity});
  return {{"n", q.size()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const nlohmann::json& j) {
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()});
  return Quiver::from_arrows(j.at("n").get<int>(), arrows);
}

// Multiple arrows are emitted as repeated edges.
inline std::string quiver_to_dot(const Quiver& q, const std::string& name = "Q") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 1; v <= q.size(); ++v) out << "  " << v << ";\n";
  for (const Arrow& a : q.arrows())
    for (int k = 0; k < a.multiplicity; ++k) out << "  " << a.src << " -> " << a.dst << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qgarnier
