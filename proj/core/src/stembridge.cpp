#include "icecrystal/stembridge.hpp"

#include <cstdint>

namespace icecrystal {

namespace {

using MaybeNode = std::optional<NodeId>;

// Walks `next` from b and counts steps; nullopt on branching or when the walk
// exceeds the node count.
template <class Neighbours>
std::optional<int> walk(const CrystalGraph& g, NodeId b, Neighbours next) {
  int length = 0;
  NodeId cur = b;
  for (;;) {
    const auto& nb = next(cur);
    if (nb.empty()) return length;
    if (nb.size() > 1) return std::nullopt;
    cur = nb.front();
    if (static_cast<std::size_t>(++length) > g.node_count()) return std::nullopt;
  }
}

}  // namespace

std::optional<PathStats> path_stats(const CrystalGraph& g, NodeId b, int i) {
  auto eps = walk(g, b, [&](NodeId x) -> const std::vector<NodeId>& { return g.in(x, i); });
  auto ph = walk(g, b, [&](NodeId x) -> const std::vector<NodeId>& { return g.out(x, i); });
  if (!eps || !ph) return std::nullopt;
  return PathStats{*eps, *ph};
}

LocalQuantities local_quantities(const CrystalGraph& g, NodeId b, int i, int j) {
  LocalQuantities q;
  const auto here = path_stats(g, b, j);
  if (!here) return q;
  if (auto up = g.e(b, i)) {
    if (auto there = path_stats(g, *up, j)) {
      q.d_phi = there->phi - here->phi;
      q.d_eps = here->epsilon - there->epsilon;
    }
  }
  if (auto down = g.f(b, i)) {
    if (auto there = path_stats(g, *down, j)) {
      q.n_phi = here->phi - there->phi;
      q.n_eps = there->epsilon - here->epsilon;
    }
  }
  return q;
}

namespace {

class Checker {
 public:
  Checker(const CrystalGraph& g, const CartanA& cartan) : g_(g), cartan_(cartan) {}

  std::vector<RegularityViolation> run() {
    structural();
    if (!out_.empty()) {
      out_.push_back({"skipped", 0, 0, 0,
                      "R3-R6 not evaluated: epsilon/phi are undefined on a non-regular structure"});
      return std::move(out_);
    }
    tabulate();
    for (NodeId b = 0; b < g_.node_count(); ++b)
      for (int i = 1; i <= rank(); ++i)
        for (int j = 1; j <= rank(); ++j)
          if (i != j) local(b, i, j);
    return std::move(out_);
  }

 private:
  int rank() const { return g_.rank(); }

  void report(const char* axiom, NodeId b, int i, int j, std::string msg) {
    out_.push_back({axiom, b, i, j, std::move(msg)});
  }

  void structural() {
    for (int i = 1; i <= rank(); ++i) {
      for (NodeId b = 0; b < g_.node_count(); ++b) {
        if (g_.out(b, i).size() > 1) report("R2", b, i, 0, "more than one outgoing edge");
        if (g_.in(b, i).size() > 1) report("R2", b, i, 0, "more than one incoming edge");
      }
      find_cycles(i);
    }
  }

  // Iterative three-colour DFS over the i-coloured subgraph.
  void find_cycles(int i) {
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> state(g_.node_count(), White);
    for (NodeId root = 0; root < g_.node_count(); ++root) {
      if (state[root] != White) continue;
      std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
      state[root] = Grey;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& succ = g_.out(v, i);
        if (next == succ.size()) {
          state[v] = Black;
          stack.pop_back();
          continue;
        }
        const NodeId w = succ[next++];
        if (state[w] == Grey) {
          report("R1", w, i, 0, "monochromatic cycle");
        } else if (state[w] == White) {
          state[w] = Grey;
          stack.push_back({w, 0});
        }
      }
    }
  }

  void tabulate() {
    const auto slots = g_.node_count() * static_cast<std::size_t>(rank());
    eps_.assign(slots, 0);
    phi_.assign(slots, 0);
    for (NodeId b = 0; b < g_.node_count(); ++b)
      for (int i = 1; i <= rank(); ++i) {
        const auto s = path_stats(g_, b, i);  // defined: R1 and R2 hold
        eps_[slot(b, i)] = s->epsilon;
        phi_[slot(b, i)] = s->phi;
      }
  }

  std::size_t slot(NodeId b, int i) const {
    return b * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(i - 1);
  }
  int eps(NodeId b, int i) const { return eps_[slot(b, i)]; }
  int phi(NodeId b, int i) const { return phi_[slot(b, i)]; }

  MaybeNode e(MaybeNode b, int i) const { return b ? g_.e(*b, i) : std::nullopt; }
  MaybeNode f(MaybeNode b, int i) const { return b ? g_.f(*b, i) : std::nullopt; }

  // Delta_i phi_j, Delta_i eps_j (need e_i b) and nabla_i phi_j (needs f_i b).
  int delta_phi(NodeId b, int i, int j) const { return phi(*g_.e(b, i), j) - phi(b, j); }
  int delta_eps(NodeId b, int i, int j) const { return eps(b, j) - eps(*g_.e(b, i), j); }
  int nabla_phi(NodeId b, int i, int j) const { return phi(b, j) - phi(*g_.f(b, i), j); }

  static std::string show(int v) { return std::to_string(v); }

  void local(NodeId b, int i, int j) {
    const MaybeNode ei = g_.e(b, i);
    const MaybeNode ej = g_.e(b, j);
    const MaybeNode fi = g_.f(b, i);
    const MaybeNode fj = g_.f(b, j);

    if (ei) {
      const int dp = delta_phi(b, i, j);
      const int de = delta_eps(b, i, j);
      const int want = cartan_.entry(j, i);
      if (dp + de != want)
        report("R3", b, i, j, "Delta phi + Delta eps = " + show(dp + de) + ", expected " + show(want));
      if (dp > 0 || de > 0)
        report("R4", b, i, j, "Delta phi = " + show(dp) + ", Delta eps = " + show(de));
    }

    if (ei && ej) {
      if (delta_eps(b, i, j) == 0) {
        const auto y = e(e(b, j), i);
        if (!y || y != e(e(b, i), j)) {
          report("R5", b, i, j, "e_i e_j b != e_j e_i b");
        } else if (nabla_phi(*y, j, i) != 0) {
          report("R5", b, i, j, "nabla_j phi_i(y) != 0");
        }
      }
      if (i < j && delta_eps(b, i, j) == -1 && delta_eps(b, j, i) == -1) {
        const auto y = e(e(e(e(b, i), j), j), i);
        if (!y || y != e(e(e(e(b, j), i), i), j)) {
          report("R6", b, i, j, "e_i e_j^2 e_i b != e_j e_i^2 e_j b");
        } else if (nabla_phi(*y, i, j) != -1 || nabla_phi(*y, j, i) != -1) {
          report("R6", b, i, j, "nabla conditions fail at y");
        }
      }
    }

    if (fi && fj) {
      if (nabla_phi(b, i, j) == 0) {
        const auto y = f(f(b, j), i);
        if (!y || y != f(f(b, i), j)) {
          report("R5'", b, i, j, "f_i f_j b != f_j f_i b");
        } else if (delta_eps(*y, j, i) != 0) {
          report("R5'", b, i, j, "Delta_j eps_i(y) != 0");
        }
      }
      if (i < j && nabla_phi(b, i, j) == -1 && nabla_phi(b, j, i) == -1) {
        const auto y = f(f(f(f(b, i), j), j), i);
        if (!y || y != f(f(f(f(b, j), i), i), j)) {
          report("R6'", b, i, j, "f_i f_j^2 f_i b != f_j f_i^2 f_j b");
        } else if (delta_eps(*y, i, j) != -1 || delta_eps(*y, j, i) != -1) {
          report("R6'", b, i, j, "Delta conditions fail at y");
        }
      }
    }
  }

  const CrystalGraph& g_;
  const CartanA& cartan_;
  std::vector<RegularityViolation> out_;
  std::vector<int> eps_;
  std::vector<int> phi_;
};

}  // namespace

std::vector<RegularityViolation> verify_regular(const CrystalGraph& g, const CartanA& cartan) {
  return Checker(g, cartan).run();
}

}  // namespace icecrystal
