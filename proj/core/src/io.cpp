#include "icecrystal/io.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <sstream>
#include <tuple>

namespace icecrystal {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json sign_row(std::span<const Sign> row) {
  auto out = ordered_json::array();
  for (Sign s : row) out.push_back(std::string(1, to_char(s)));
  return out;
}

std::vector<Sign> read_grid(const ordered_json& grid, std::size_t rows, std::size_t cols,
                            const char* name) {
  if (!grid.is_array() || grid.size() != rows)
    throw FormatError(std::string(name) + " must have " + std::to_string(rows) + " rows");
  std::vector<Sign> out;
  out.reserve(rows * cols);
  for (const auto& row : grid) {
    if (!row.is_array() || row.size() != cols)
      throw FormatError(std::string(name) + " rows must have " + std::to_string(cols) + " entries");
    for (const auto& cell : row) {
      if (!cell.is_string()) throw FormatError(std::string(name) + " entries must be strings");
      try {
        out.push_back(sign_from_string(cell.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
    }
  }
  return out;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> int_list(const ordered_json& j, const char* name) {
  if (!j.is_array()) throw FormatError(std::string(name) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError(std::string(name) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const ordered_json& field(const ordered_json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    throw FormatError(std::string("missing field \"") + name + "\"");
  return obj.at(name);
}

}  // namespace

std::string model_to_json(const IceModel& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  const auto s = static_cast<std::size_t>(m.cols());
  ordered_json j;
  j["n"] = m.rows();
  j["lambda"] = m.lambda().parts();
  j["row_order"] = "bottom_up";
  auto h = ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) h.push_back(sign_row(m.horizontal_edges().subspan(r * (s + 1), s + 1)));
  auto v = ordered_json::array();
  for (std::size_t k = 0; k <= n; ++k) v.push_back(sign_row(m.vertical_edges().subspan(k * s, s)));
  j["h_edges"] = std::move(h);
  j["v_edges"] = std::move(v);
  return j.dump();
}

IceModel model_from_json(std::string_view text) {
  const auto j = parse(text);
  const auto& n_field = field(j, "n");
  if (!n_field.is_number_integer() || n_field.get<int>() < 1)
    throw FormatError("\"n\" must be a positive integer");
  const int n = n_field.get<int>();
  if (!j.contains("row_order") || j.at("row_order") != "bottom_up")
    throw FormatError("\"row_order\" must be \"bottom_up\"");

  std::optional<Partition> lambda;
  try {
    lambda.emplace(int_list(field(j, "lambda"), "lambda"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  const auto& h = field(j, "h_edges");
  if (!h.is_array() || h.empty() || !h.front().is_array() || h.front().size() < 2)
    throw FormatError("h_edges must be a nonempty grid");
  const auto s = h.front().size() - 1;
  auto hs = read_grid(h, static_cast<std::size_t>(n), s + 1, "h_edges");
  auto vs = read_grid(field(j, "v_edges"), static_cast<std::size_t>(n) + 1, s, "v_edges");
  return IceModel(std::move(*lambda), n, static_cast<int>(s), std::move(hs), std::move(vs));
}

// ---------------------------------------------------------------------------
// Graphs

std::string graph_to_json(const CrystalGraph& g) {
  std::vector<NodeId> order(g.node_count());
  for (NodeId b = 0; b < order.size(); ++b) order[b] = b;
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return g.node(a).key < g.node(b).key; });

  auto nodes = ordered_json::array();
  for (NodeId b : order) {
    const auto& node = g.node(b);
    ordered_json j;
    j["key"] = node.key;
    if (node.boxes) {
      auto bx = ordered_json::array();
      for (const auto& c : *node.boxes) bx.push_back({c.row, c.col});
      j["boxes"] = std::move(bx);
    }
    j["weight"] = node.weight.counts();
    nodes.push_back(std::move(j));
  }

  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [&](const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(g.node(a.src).key, a.color, g.node(a.dst).key) <
           std::tie(g.node(b.src).key, b.color, g.node(b.dst).key);
  });
  auto ej = ordered_json::array();
  for (const auto& e : edges) {
    ordered_json j;
    j["src"] = g.node(e.src).key;
    j["color"] = e.color;
    j["dst"] = g.node(e.dst).key;
    ej.push_back(std::move(j));
  }

  ordered_json out;
  out["lambda"] = g.lambda();
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(ej);
  return out.dump();
}

CrystalGraph graph_from_json(std::string_view text) {
  const auto j = parse(text);
  auto lambda = int_list(field(j, "lambda"), "lambda");
  if (lambda.empty()) throw FormatError("\"lambda\" must be nonempty");
  const int rank = static_cast<int>(lambda.size()) - 1;
  CrystalGraph g(lambda, rank);

  const auto& nodes = field(j, "nodes");
  if (!nodes.is_array()) throw FormatError("\"nodes\" must be an array");
  for (const auto& node : nodes) {
    const auto& key = field(node, "key");
    if (!key.is_string()) throw FormatError("node keys must be strings");
    auto wt = int_list(field(node, "weight"), "weight");
    if (wt.size() != lambda.size()) throw FormatError("weight length must equal lambda length");
    GraphNode gn{key.get<std::string>(), Weight(std::move(wt)).canonical(), std::nullopt};
    if (node.contains("boxes")) {
      BoxSet b;
      for (const auto& c : node.at("boxes")) {
        auto pq = int_list(c, "boxes");
        if (pq.size() != 2) throw FormatError("boxes must be [row, column] pairs");
        b.insert({pq[0], pq[1]});
      }
      gn.boxes = std::move(b);
    }
    try {
      g.add_node(std::move(gn));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }

  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw FormatError("\"edges\" must be an array");
  for (const auto& e : edges) {
    const auto& src = field(e, "src");
    const auto& dst = field(e, "dst");
    const auto& color = field(e, "color");
    if (!src.is_string() || !dst.is_string() || !color.is_number_integer())
      throw FormatError("edges need string src/dst and an integer color");
    auto a = g.find(src.get<std::string>());
    auto b = g.find(dst.get<std::string>());
    if (!a || !b) throw FormatError("edge refers to an unknown node");
    const int c = color.get<int>();
    if (c < 1 || c > rank) throw FormatError("edge color " + std::to_string(c) + " out of range");
    g.add_edge(*a, c, *b);
  }
  return g;
}

std::string graph_to_dot(const CrystalGraph& g) {
  static constexpr std::array<const char*, 8> kPalette = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };

  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (NodeId b = 0; b < g.node_count(); ++b) {
    const auto& node = g.node(b);
    const auto label = node.boxes ? to_string(*node.boxes) : node.key;
    os << "  n" << b << " [label=" << quote(label) << "];\n";
  }
  for (const auto& e : g.edges()) {
    const auto* colour = kPalette[static_cast<std::size_t>(e.color - 1) % kPalette.size()];
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"i=" << e.color << "\", color=\""
       << colour << "\", fontcolor=\"" << colour << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace icecrystal
