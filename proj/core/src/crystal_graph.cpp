#include "icecrystal/crystal_graph.hpp"

#include <deque>
#include <stdexcept>

namespace icecrystal {

std::string node_key(const Partition& lambda, const BoxSet& b) {
  std::string key = lambda.to_string() + "|";
  for (const auto& c : b) key += to_string(c);
  return key;
}

IceModel highest_weight_model(const Partition& lambda) {
  const int s = lambda.columns();
  BoxSet b;
  for (int i = 1; i <= lambda.n(); ++i)
    for (int q = s - lambda[i] + 1; q <= s; ++q) b.insert({i, q});
  return from_boxes(lambda, b);
}

namespace {

GraphNode make_node(const IceModel& m) {
  auto b = boxes(m);
  auto key = node_key(m.lambda(), b);
  return {std::move(key), weight(m).canonical(), std::move(b)};
}

}  // namespace

IceCrystal generate(const Partition& lambda, std::size_t node_cap) {
  const int rank = lambda.n() - 1;
  IceCrystal out{lambda, CrystalGraph(lambda.parts(), rank), {}};
  auto& g = out.graph;

  auto admit = [&](IceModel m) -> NodeId {
    auto node = make_node(m);
    if (auto id = g.find(node.key)) return *id;
    if (g.node_count() >= node_cap)
      throw CapExceeded("crystal of " + lambda.to_string() + " has more than " +
                        std::to_string(node_cap) + " nodes");
    const NodeId id = g.add_node(std::move(node));
    out.models.push_back(std::move(m));
    return id;
  };

  admit(highest_weight_model(lambda));
  for (NodeId b = 0; b < g.node_count(); ++b) {
    for (int i = 1; i <= rank; ++i) {
      auto next = f_op(out.models[b], i);
      if (!next) continue;
      const NodeId t = admit(std::move(*next));
      g.add_edge(b, i, t);
    }
  }

  // e-closure: must not discover anything new.
  for (NodeId b = 0; b < g.node_count(); ++b) {
    for (int i = 1; i <= rank; ++i) {
      auto up = e_op(out.models[b], i);
      if (!up) continue;
      auto id = g.find(make_node(*up).key);
      if (!id || g.f(*id, i) != b)
        throw std::logic_error("e_" + std::to_string(i) + " of node " + g.node(b).key +
                               " is not inverse to an f edge");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Staircase

StaircaseReport verify_staircase(const IceModel& m) {
  StaircaseReport r;
  const int n = m.rows();
  const int s = m.cols();
  const auto b = boxes(m);

  std::vector<std::vector<int>> by_row(static_cast<std::size_t>(n + 1));
  for (const auto& c : b) by_row[static_cast<std::size_t>(c.row)].push_back(c.col);

  for (int p = 1; p <= n; ++p) {
    const auto& cols = by_row[static_cast<std::size_t>(p)];
    const int threshold = cols.empty() ? s : cols.front() - 1;
    r.thresholds.push_back(threshold);
    const bool flush = static_cast<int>(cols.size()) == s - threshold && (cols.empty() || cols.back() == s);
    if (!flush) {
      r.stairs = false;
      r.messages.push_back("row " + std::to_string(p) + " is not a right-flushed run of boxes");
    }
  }

  for (int p = 2; p <= n; ++p)
    if (r.thresholds[static_cast<std::size_t>(p - 2)] > r.thresholds[static_cast<std::size_t>(p - 1)]) {
      r.monotone = false;
      r.messages.push_back("stair of row " + std::to_string(p) + " is longer than row " +
                           std::to_string(p - 1));
    }

  for (const auto& c : b)
    if (c.col < n - c.row + 2) {
      r.bounded = false;
      r.messages.push_back("box " + to_string(c) + " lies left of column n - p + 2");
    }

  // The stair of row p, leftmost box at column q_p + 1 (s + 1 when empty),
  // should carry top-edge minuses at (p + k, q_p - k) for k = 0..n-p; the
  // last of them is the top boundary column q_p - (n - p).
  std::set<int> ends;
  bool ends_distinct = true;
  for (int p = 1; p <= n; ++p) {
    const int threshold = r.thresholds[static_cast<std::size_t>(p - 1)];
    for (int k = 0; k <= n - p; ++k) {
      const int col = threshold - k;
      if (col < 1 || m.vertical(p + k, col) != Sign::Minus) {
        r.diagonals = false;
        r.messages.push_back("diagonal of minuses above row " + std::to_string(p) +
                             " stair breaks at row " + std::to_string(p + k));
        break;
      }
    }
    ends_distinct = ends.insert(threshold - (n - p)).second && ends_distinct;
  }
  std::set<int> top;
  for (int q = 1; q <= s; ++q)
    if (m.vertical(n, q) == Sign::Minus) top.insert(q);
  if (!ends_distinct || ends != top) {
    r.bijection = false;
    r.messages.push_back("stairs do not correspond one-to-one with top boundary minuses");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Crystal axioms

namespace {

// Length of the string walked by `step` from b; nullopt if it does not end
// within the node count (a cycle) or hits a branching node.
template <class Step>
std::optional<int> string_length(NodeId b, std::size_t limit, Step step) {
  int length = 0;
  std::optional<NodeId> cur = step(b);
  while (cur) {
    if (static_cast<std::size_t>(++length) > limit) return std::nullopt;
    cur = step(*cur);
  }
  return length;
}

}  // namespace

std::vector<AxiomViolation> check_axioms_C1_C6(const CrystalGraph& g, const RaisingOperator& raise) {
  std::vector<AxiomViolation> out;
  const auto limit = g.node_count();
  auto report = [&](const char* axiom, NodeId b, int i, std::string msg) {
    out.push_back({axiom, b, i, std::move(msg)});
  };

  for (int i = 1; i <= g.rank(); ++i) {
    bool functional = true;
    for (NodeId b = 0; b < g.node_count(); ++b)
      if (g.out(b, i).size() > 1) {
        functional = false;
        report("map", b, i, "more than one outgoing edge");
      }
    if (!functional) continue;

    auto f = [&](NodeId x) { return g.f(x, i); };
    auto e = [&](NodeId x) { return raise(x, i); };
    std::vector<std::optional<int>> eps(g.node_count()), ph(g.node_count());
    for (NodeId b = 0; b < g.node_count(); ++b) {
      eps[b] = string_length(b, limit, e);
      ph[b] = string_length(b, limit, f);
      if (!eps[b] || !ph[b]) report("map", b, i, "infinite string");
    }

    for (NodeId b = 0; b < g.node_count(); ++b) {
      if (!eps[b] || !ph[b]) continue;
      const auto& wt = g.node(b).weight;
      if (*ph[b] != *eps[b] + pairing(i, wt))
        report("C1", b, i,
               "phi=" + std::to_string(*ph[b]) + " eps=" + std::to_string(*eps[b]) +
                   " <h,wt>=" + std::to_string(pairing(i, wt)));

      if (auto up = e(b)) {
        if (!g.node(*up).weight.equivalent(wt.plus_root(i)))
          report("C2", b, i, "wt(e b) != wt(b) + alpha");
        if (eps[*up] && ph[*up] && (*eps[*up] != *eps[b] - 1 || *ph[*up] != *ph[b] + 1))
          report("C4", b, i, "eps/phi do not shift by -1/+1 under e");
        if (g.f(*up, i) != b) report("C6", b, i, "e(b) = b'' but f(b'') != b");
      }
      if (auto down = f(b)) {
        if (!g.node(*down).weight.equivalent(wt.plus_root(i, -1)))
          report("C3", b, i, "wt(f b) != wt(b) - alpha");
        if (eps[*down] && ph[*down] && (*eps[*down] != *eps[b] + 1 || *ph[*down] != *ph[b] - 1))
          report("C5", b, i, "eps/phi do not shift by +1/-1 under f");
        if (e(*down) != b) report("C6", b, i, "f(b) = b' but e(b') != b");
      }
    }
  }
  return out;
}

std::vector<AxiomViolation> check_axioms_C1_C6(const CrystalGraph& g) {
  return check_axioms_C1_C6(g, [&g](NodeId b, int i) { return g.e(b, i); });
}

std::vector<AxiomViolation> check_axioms_C1_C6(const IceCrystal& c) {
  return check_axioms_C1_C6(c.graph, [&c](NodeId b, int i) -> std::optional<NodeId> {
    auto up = e_op(c.models.at(b), i);
    if (!up) return std::nullopt;
    return c.graph.find(node_key(c.lambda, boxes(*up)));
  });
}

std::map<Weight, int> character(const CrystalGraph& g) {
  std::map<Weight, int> out;
  for (const auto& node : g.nodes()) ++out[node.weight.canonical()];
  return out;
}

}  // namespace icecrystal
