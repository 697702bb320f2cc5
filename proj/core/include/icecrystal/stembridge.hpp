#pragma once

// Stembridge's local axioms for simply-laced (type A) regular crystals,
// checked on an arbitrary finite edge-coloured graph.

#include <optional>
#include <string>
#include <vector>

#include "icecrystal/graph.hpp"

namespace icecrystal {

/// Cartan matrix of type A_rank.
class CartanA {
 public:
  explicit CartanA(int rank) : rank_(rank) {}
  int rank() const noexcept { return rank_; }
  int entry(int i, int j) const noexcept { return cartan_entry(i, j); }

 private:
  int rank_;
};

struct PathStats {
  int epsilon = 0;
  int phi = 0;
};

/// Distances from b to the head and the tail of its i-string. nullopt when
/// the i-coloured subgraph through b branches or is cyclic.
std::optional<PathStats> path_stats(const CrystalGraph& g, NodeId b, int i);

/// The differences
///   d_phi = phi_j(e_i b) - phi_j(b),   d_eps = eps_j(b) - eps_j(e_i b),
///   n_phi = phi_j(b) - phi_j(f_i b),   n_eps = eps_j(f_i b) - eps_j(b).
/// The first two exist iff e_i(b) does, the last two iff f_i(b) does.
struct LocalQuantities {
  std::optional<int> d_phi;
  std::optional<int> d_eps;
  std::optional<int> n_phi;
  std::optional<int> n_eps;
};

LocalQuantities local_quantities(const CrystalGraph& g, NodeId b, int i, int j);

struct RegularityViolation {
  std::string axiom;  // "R1".."R6", "R5'", "R6'", or "skipped"
  NodeId node;
  int i;
  int j;  // 0 for single-colour axioms
  std::string message;
};

/// Checks R1, R2 and, when those hold, R3-R6 and R5'-R6'. Empty result means
/// the graph is regular. Only graph structure is consulted; node weights are
/// ignored.
std::vector<RegularityViolation> verify_regular(const CrystalGraph& g, const CartanA& cartan);
inline std::vector<RegularityViolation> verify_regular(const CrystalGraph& g) {
  return verify_regular(g, CartanA(g.rank()));
}

}  // namespace icecrystal
