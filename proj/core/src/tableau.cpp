#include "icecrystal/tableau.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace icecrystal {

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

Weight Tableau::content(int n) const {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (const auto& row : rows)
    for (int x : row) ++counts.at(static_cast<std::size_t>(x - 1));
  return Weight(std::move(counts));
}

bool is_semistandard(const Tableau& t, int n) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int n, std::size_t cap) {
  Tableau t;
  for (int part : lambda.parts())
    if (part > 0) t.rows.emplace_back(static_cast<std::size_t>(part), 0);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) cells.emplace_back(r, c);

  std::vector<Tableau> out;
  auto fill = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " tableaux of shape " +
                          lambda.to_string());
      out.push_back(t);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int x = lo; x <= n; ++x) {
      t.rows[r][c] = x;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::uint64_t dimension(const Partition& lambda, int n) {
  using boost::multiprecision::cpp_int;
  cpp_int num = 1;
  cpp_int den = 1;
  auto part = [&](int i) { return i <= lambda.n() ? lambda[i] : 0; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= part(i) - part(j) + j - i;
      den *= j - i;
    }
  const cpp_int q = num / den;
  if (q * den != num) throw std::logic_error("dimension product is not an integer");
  if (q > cpp_int(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("dimension of " + lambda.to_string() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::vector<Position> reading_order(const Tableau& t) {
  std::vector<Position> order;
  for (std::size_t r = t.rows.size(); r-- > 0;)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) order.push_back({r, c});
  return order;
}

// Uncancelled letters i and i+1, in reading order.
struct Bracketing {
  std::vector<Position> free_i;
  std::vector<Position> free_next;
};

Bracketing bracket(const Tableau& t, int i) {
  Bracketing b;
  for (const auto& p : reading_order(t)) {
    const int x = t.rows[p.row][p.col];
    if (x == i + 1) {
      b.free_next.push_back(p);
    } else if (x == i) {
      if (!b.free_next.empty()) {
        b.free_next.pop_back();
      } else {
        b.free_i.push_back(p);
      }
    }
  }
  return b;
}

}  // namespace

std::optional<Tableau> tableau_f(const Tableau& t, int i) {
  const auto b = bracket(t, i);
  if (b.free_i.empty()) return std::nullopt;
  Tableau out = t;
  const auto p = b.free_i.back();
  out.rows[p.row][p.col] = i + 1;
  return out;
}

std::optional<Tableau> tableau_e(const Tableau& t, int i) {
  const auto b = bracket(t, i);
  if (b.free_next.empty()) return std::nullopt;
  Tableau out = t;
  const auto p = b.free_next.front();
  out.rows[p.row][p.col] = i;
  return out;
}

namespace {

std::string tableau_key(const Tableau& t) { return "[" + t.to_string() + "]"; }

}  // namespace

TableauCrystal tableau_crystal(const Partition& lambda, int n, std::size_t cap) {
  TableauCrystal out{lambda, n, CrystalGraph(lambda.parts(), n - 1), enumerate_ssyt(lambda, n, cap)};
  for (const auto& t : out.tableaux)
    out.graph.add_node({tableau_key(t), t.content(n).canonical(), std::nullopt});
  for (NodeId b = 0; b < out.tableaux.size(); ++b)
    for (int i = 1; i < n; ++i)
      if (auto next = tableau_f(out.tableaux[b], i)) {
        auto id = out.graph.find(tableau_key(*next));
        if (!id) throw std::logic_error("f_" + std::to_string(i) + " left the tableau set");
        out.graph.add_edge(b, i, *id);
      }
  return out;
}

std::vector<AxiomViolation> check_axioms_C1_C6(const TableauCrystal& c) {
  return check_axioms_C1_C6(c.graph, [&c](NodeId b, int i) -> std::optional<NodeId> {
    auto up = tableau_e(c.tableaux.at(b), i);
    if (!up) return std::nullopt;
    return c.graph.find(tableau_key(*up));
  });
}

// ---------------------------------------------------------------------------
// Isomorphism

IsomorphismResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  IsomorphismResult r;
  auto fail = [&](std::string why) {
    r.isomorphic = false;
    r.mapping.clear();
    r.witness = std::move(why);
    return r;
  };

  if (g1.rank() != g2.rank())
    return fail("rank " + std::to_string(g1.rank()) + " vs " + std::to_string(g2.rank()));
  if (g1.node_count() != g2.node_count())
    return fail("node count " + std::to_string(g1.node_count()) + " vs " +
                std::to_string(g2.node_count()));
  if (g1.edge_count() != g2.edge_count())
    return fail("edge count " + std::to_string(g1.edge_count()) + " vs " +
                std::to_string(g2.edge_count()));
  const auto s1 = find_highest_weights(g1);
  const auto s2 = find_highest_weights(g2);
  if (s1.size() != 1 || s2.size() != 1)
    return fail("expected one source in each graph, found " + std::to_string(s1.size()) +
                " and " + std::to_string(s2.size()));
  if (g1.node_count() == 0) return fail("empty graph");

  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> map(g1.node_count(), kUnset);
  std::vector<bool> used(g2.node_count(), false);
  std::deque<NodeId> queue;

  auto bind = [&](NodeId a, NodeId b) -> std::optional<std::string> {
    if (map[a] == b) return std::nullopt;
    if (map[a] != kUnset)
      return "node " + g1.node(a).key + " forced to two images";
    if (used[b]) return "node " + g2.node(b).key + " hit twice";
    if (!g1.node(a).weight.equivalent(g2.node(b).weight))
      return "weight mismatch at " + g1.node(a).key + " -> " + g2.node(b).key;
    map[a] = b;
    used[b] = true;
    queue.push_back(a);
    return std::nullopt;
  };

  if (auto err = bind(s1.front(), s2.front())) return fail(*err);
  while (!queue.empty()) {
    const NodeId a = queue.front();
    queue.pop_front();
    const NodeId b = map[a];
    for (int i = 1; i <= g1.rank(); ++i) {
      const auto& out1 = g1.out(a, i);
      const auto& out2 = g2.out(b, i);
      const auto& in1 = g1.in(a, i);
      const auto& in2 = g2.in(b, i);
      if (out1.size() > 1 || out2.size() > 1 || in1.size() > 1 || in2.size() > 1)
        return fail("colour " + std::to_string(i) + " is not functional at " + g1.node(a).key);
      if (out1.size() != out2.size())
        return fail("f_" + std::to_string(i) + " defined on only one side at " + g1.node(a).key);
      if (in1.size() != in2.size())
        return fail("e_" + std::to_string(i) + " defined on only one side at " + g1.node(a).key);
      if (!out1.empty())
        if (auto err = bind(out1.front(), out2.front())) return fail(*err);
      if (!in1.empty())
        if (auto err = bind(in1.front(), in2.front())) return fail(*err);
    }
  }

  for (NodeId a = 0; a < map.size(); ++a)
    if (map[a] == kUnset) return fail("node " + g1.node(a).key + " not reached from the source");
  for (const auto& e : g1.edges()) {
    const auto& targets = g2.out(map[e.src], e.color);
    if (targets.size() != 1 || targets.front() != map[e.dst])
      return fail("edge " + g1.node(e.src).key + " -" + std::to_string(e.color) + "-> " +
                  g1.node(e.dst).key + " has no image");
  }
  r.isomorphic = true;
  r.mapping = std::move(map);
  return r;
}

}  // namespace icecrystal
