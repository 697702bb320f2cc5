#include "icecrystal/graph.hpp"

#include <stdexcept>

namespace icecrystal {

NodeId CrystalGraph::add_node(GraphNode node) {
  const NodeId id = nodes_.size();
  if (!index_.emplace(node.key, id).second)
    throw std::invalid_argument("duplicate node key \"" + node.key + "\"");
  nodes_.push_back(std::move(node));
  const auto colors = static_cast<std::size_t>(rank_);
  out_.resize(out_.size() + colors);
  in_.resize(in_.size() + colors);
  return id;
}

std::size_t CrystalGraph::slot(NodeId id, int color) const {
  if (id >= nodes_.size()) throw std::out_of_range("unknown node " + std::to_string(id));
  if (color < 1 || color > rank_)
    throw std::out_of_range("color " + std::to_string(color) + " outside 1.." +
                            std::to_string(rank_));
  return id * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(color - 1);
}

void CrystalGraph::add_edge(NodeId src, int color, NodeId dst) {
  const auto s = slot(src, color);
  const auto d = slot(dst, color);
  edges_.push_back({src, color, dst});
  out_[s].push_back(dst);
  in_[d].push_back(src);
}

void CrystalGraph::remove_edge(std::size_t index) {
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
  rebuild_adjacency();
}

void CrystalGraph::set_edge(std::size_t index, ColoredEdge e) {
  slot(e.src, e.color);
  slot(e.dst, e.color);
  edges_.at(index) = e;
  rebuild_adjacency();
}

void CrystalGraph::rebuild_adjacency() {
  for (auto& v : out_) v.clear();
  for (auto& v : in_) v.clear();
  for (const auto& e : edges_) {
    out_[slot(e.src, e.color)].push_back(e.dst);
    in_[slot(e.dst, e.color)].push_back(e.src);
  }
}

std::optional<NodeId> CrystalGraph::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<NodeId>& CrystalGraph::out(NodeId id, int color) const {
  return out_[slot(id, color)];
}

const std::vector<NodeId>& CrystalGraph::in(NodeId id, int color) const {
  return in_[slot(id, color)];
}

std::optional<NodeId> CrystalGraph::f(NodeId id, int color) const {
  const auto& o = out(id, color);
  if (o.size() != 1) return std::nullopt;
  return o.front();
}

std::optional<NodeId> CrystalGraph::e(NodeId id, int color) const {
  const auto& o = in(id, color);
  if (o.size() != 1) return std::nullopt;
  return o.front();
}

std::vector<NodeId> find_highest_weights(const CrystalGraph& g) {
  std::vector<NodeId> out;
  for (NodeId b = 0; b < g.node_count(); ++b) {
    bool source = true;
    for (int i = 1; i <= g.rank() && source; ++i) source = g.in(b, i).empty();
    if (source) out.push_back(b);
  }
  return out;
}

}  // namespace icecrystal
