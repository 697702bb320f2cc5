#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "icecrystal/crystal_ops.hpp"
#include "icecrystal/ice_model.hpp"

namespace icecrystal {

using NodeId = std::size_t;

struct GraphNode {
  std::string key;
  Weight weight;  // canonical representative
  std::optional<BoxSet> boxes;
};

/// An i-coloured edge src -> dst means f_i(src) = dst.
struct ColoredEdge {
  NodeId src;
  int color;
  NodeId dst;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Finite directed graph with edges coloured by 1..rank. Nothing here assumes
/// the graph is a crystal; parallel edges and cycles are representable so the
/// verifiers can report them.
class CrystalGraph {
 public:
  CrystalGraph() = default;
  CrystalGraph(std::vector<int> lambda, int rank) : lambda_(std::move(lambda)), rank_(rank) {}

  const std::vector<int>& lambda() const noexcept { return lambda_; }
  int rank() const noexcept { return rank_; }

  /// Throws std::invalid_argument for a duplicate key.
  NodeId add_node(GraphNode node);
  /// Throws std::out_of_range for unknown nodes or colors outside 1..rank.
  void add_edge(NodeId src, int color, NodeId dst);
  /// Removes the edge at position `index` of edges().
  void remove_edge(std::size_t index);
  void set_edge(std::size_t index, ColoredEdge e);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const GraphNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }
  std::optional<NodeId> find(const std::string& key) const;

  /// Targets of i-coloured edges leaving / entering `id`.
  const std::vector<NodeId>& out(NodeId id, int color) const;
  const std::vector<NodeId>& in(NodeId id, int color) const;

  /// The unique i-successor (f_i) or i-predecessor (e_i), nullopt when there
  /// is none or more than one.
  std::optional<NodeId> f(NodeId id, int color) const;
  std::optional<NodeId> e(NodeId id, int color) const;

 private:
  std::size_t slot(NodeId id, int color) const;
  void rebuild_adjacency();

  std::vector<int> lambda_;
  int rank_ = 0;
  std::vector<GraphNode> nodes_;
  std::vector<ColoredEdge> edges_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> out_;  // slot(node, color)
  std::vector<std::vector<NodeId>> in_;
};

/// Nodes with no incoming edge of any colour.
std::vector<NodeId> find_highest_weights(const CrystalGraph& g);

}  // namespace icecrystal
