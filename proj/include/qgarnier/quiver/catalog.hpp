#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quiver.hpp"

namespace qgarnier {

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"Q12", "Q11", "Q101", "Q102", "Q103", "Q104", "Q105"};
  return names;
}

inline Quiver quiver_q12() {
  static const std::vector<Arrow> arrows{
      {2, 11, 1}, {11, 1, 1}, {12, 2, 1}, {1, 12, 1}, {11, 10, 1}, {9, 11, 1}, {12, 9, 1}, {10, 12, 1},
      {4, 1, 1},  {2, 4, 1},  {3, 2, 1},  {1, 3, 1},  {8, 10, 1},  {10, 7, 1}, {7, 9, 1},  {9, 8, 1},
      {3, 5, 1},  {5, 4, 1},  {4, 6, 1},  {6, 3, 1},  {8, 5, 1},   {5, 7, 1},  {6, 8, 1},  {7, 6, 1}};
  return Quiver::from_arrows(12, arrows);
}

// How each degenerate quiver arises from its parent.
struct ConfluenceSpec {
  std::string source;
  int i = 0;
  int j = 0;
  VertexMap relabel;
};

inline ConfluenceSpec confluence_origin(std::string_view name) {
  if (name == "Q11") return {"Q12", 12, 1, {}};
  if (name == "Q101") return {"Q11", 4, 5, VertexMap{{11, 4}}};
  if (name == "Q102") return {"Q11", 6, 4, VertexMap{{11, 6}}};
  if (name == "Q103") return {"Q11", 5, 8, VertexMap{{11, 5}}};
  if (name == "Q104") return {"Q11", 11, 2, {}};
  if (name == "Q105") return {"Q11", 1, 11, VertexMap{{11, 1}}};
  throw UnknownName(std::string(name));
}

inline Quiver catalog_quiver(std::string_view name) {
  if (name == "Q12") return quiver_q12();
  ConfluenceSpec c = confluence_origin(name);
  return confluence_matrix(catalog_quiver(c.source), c.i, c.j, c.relabel);
}

}  // namespace qgarnier
