#pragma once

// File formats.
//
// Model JSON, one line, keys in this order:
//   {"n":3,"lambda":[2,1,0],"row_order":"bottom_up",
//    "h_edges":[["+",...],...],"v_edges":[["+",...],...]}
// h_edges has n rows of s+1 signs (row 1 first), v_edges has n+1 rows of s
// signs (the bottom boundary first, the top boundary last).
//
// Graph JSON:
//   {"lambda":[...],"nodes":[{"key":..,"boxes":[[p,q],...],"weight":[...]},...],
//    "edges":[{"src":..,"color":i,"dst":..},...]}
// Nodes are sorted by key and edges by (src, color, dst).

#include <stdexcept>
#include <string>
#include <string_view>

#include "icecrystal/graph.hpp"
#include "icecrystal/ice_model.hpp"

namespace icecrystal {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string model_to_json(const IceModel& m);
/// Throws FormatError on malformed input. The model is not validated.
IceModel model_from_json(std::string_view text);

std::string graph_to_json(const CrystalGraph& g);
/// Throws FormatError on malformed input. The rank is n - 1 where n is the
/// length of "lambda".
CrystalGraph graph_from_json(std::string_view text);

/// Graphviz rendering: node labels are box sets (or keys), edges carry
/// "i=<color>" labels and a colour from a fixed eight-entry palette.
std::string graph_to_dot(const CrystalGraph& g);

}  // namespace icecrystal
