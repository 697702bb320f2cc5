#pragma once

// The crystal graph of M(lambda): construction from the highest weight
// model, audits of the crystal axioms and of the staircase shape of the
// highest weight element, and the character.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "icecrystal/crystal_ops.hpp"
#include "icecrystal/graph.hpp"
#include "icecrystal/ice_model.hpp"

namespace icecrystal {

inline constexpr std::size_t kDefaultNodeCap = 100'000;

/// Canonical node key: the partition followed by the sorted box set, e.g.
/// "(2,1,0)|(1,4)(1,5)(2,5)".
std::string node_key(const Partition& lambda, const BoxSet& b);

/// The model whose row i holds boxes exactly in the last lambda_i columns.
IceModel highest_weight_model(const Partition& lambda);

struct IceCrystal {
  Partition lambda;
  CrystalGraph graph;
  std::vector<IceModel> models;  // indexed by NodeId
};

/// Breadth-first closure of the highest weight model under f_1..f_{n-1},
/// colours in ascending order. Afterwards every e_i image is checked to be
/// an existing node joined by the matching edge (std::logic_error if not).
/// Throws CapExceeded when more than `node_cap` nodes are discovered.
IceCrystal generate(const Partition& lambda, std::size_t node_cap = kDefaultNodeCap);

struct StaircaseReport {
  bool stairs = true;      // row p boxed exactly right of a threshold q_p
  bool monotone = true;    // q_1 <= q_2 <= ... <= q_n
  bool bounded = true;     // every box (p, q) has q >= n - p + 2
  bool diagonals = true;   // minus diagonal above each stair reaches the top
  bool bijection = true;   // stairs <-> top boundary minuses
  std::vector<int> thresholds;
  std::vector<std::string> messages;

  bool ok() const noexcept { return stairs && monotone && bounded && diagonals && bijection; }
};

StaircaseReport verify_staircase(const IceModel& m);

struct AxiomViolation {
  std::string axiom;  // "C1".."C6", or "map" when f_i / e_i is not a function
  NodeId node;
  int color;
  std::string message;
};

/// e_i as a partial map on nodes, independent of the graph's edges.
using RaisingOperator = std::function<std::optional<NodeId>(NodeId, int)>;

/// Evaluates C1-C6 at every node and colour. f_i is read from the edges,
/// e_i from `raise`; epsilon and phi are lengths of the e- and f-strings.
std::vector<AxiomViolation> check_axioms_C1_C6(const CrystalGraph& g, const RaisingOperator& raise);
/// Same, with e_i read from the incoming edges.
std::vector<AxiomViolation> check_axioms_C1_C6(const CrystalGraph& g);
/// Same, with e_i computed on the stored models by e_op.
std::vector<AxiomViolation> check_axioms_C1_C6(const IceCrystal& c);

/// Multiset of canonical node weights.
std::map<Weight, int> character(const CrystalGraph& g);

}  // namespace icecrystal
