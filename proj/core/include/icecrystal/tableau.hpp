#pragma once

// Semistandard tableaux and their crystal B(lambda), used as an independent
// reference for the ice crystal.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icecrystal/crystal_graph.hpp"
#include "icecrystal/graph.hpp"
#include "icecrystal/ice_model.hpp"

namespace icecrystal {

/// Rows in English notation: rows[0] is the longest (top) row. Entries lie in
/// 1..n, weakly increase along rows and strictly increase down columns.
struct Tableau {
  std::vector<std::vector<int>> rows;

  /// Rows separated by '/', e.g. "11/2".
  std::string to_string() const;
  /// Counts of each entry 1..n.
  Weight content(int n) const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

bool is_semistandard(const Tableau& t, int n);

inline constexpr std::size_t kDefaultTableauCap = 1'000'000;

/// All semistandard tableaux of shape lambda with entries <= n, in
/// lexicographic order of the row-major entry sequence. Throws CapExceeded
/// past `cap` tableaux.
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int n,
                                    std::size_t cap = kDefaultTableauCap);

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i), exactly. Throws
/// std::overflow_error if the result does not fit in 64 bits.
std::uint64_t dimension(const Partition& lambda, int n);

/// Bracketing rule on the reading word (rows bottom to top, each left to
/// right). Each i+1 followed later by an i is cancelled; f_i turns the
/// rightmost uncancelled i into i+1, e_i the leftmost uncancelled i+1 into i.
std::optional<Tableau> tableau_f(const Tableau& t, int i);
std::optional<Tableau> tableau_e(const Tableau& t, int i);

struct TableauCrystal {
  Partition lambda;
  int n;
  CrystalGraph graph;
  std::vector<Tableau> tableaux;  // indexed by NodeId
};

/// Nodes are enumerate_ssyt(lambda, n); edges from tableau_f.
TableauCrystal tableau_crystal(const Partition& lambda, int n,
                               std::size_t cap = kDefaultTableauCap);

/// C1-C6 with e_i computed by tableau_e.
std::vector<AxiomViolation> check_axioms_C1_C6(const TableauCrystal& c);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<NodeId> mapping;  // g1 node -> g2 node, when isomorphic
  std::string witness;          // reason, when not

  explicit operator bool() const noexcept { return isomorphic; }
};

/// Colour- and weight-preserving isomorphism between two connected crystals
/// with a unique source. The source is mapped to the source and the map is
/// propagated along f and e edges; it is accepted iff it comes out total,
/// injective and maps every edge onto an edge.
IsomorphismResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

}  // namespace icecrystal
