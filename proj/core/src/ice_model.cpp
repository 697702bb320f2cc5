#include "icecrystal/ice_model.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>

namespace icecrystal {

Sign sign_from_string(std::string_view text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw std::invalid_argument("expected \"+\" or \"-\", got \"" + std::string(text) + "\"");
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition " + to_string() + " is not weakly decreasing");
  }
  if (parts_.back() != 0)
    throw std::invalid_argument("partition " + to_string() + " must end in 0");
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw std::invalid_argument("cannot parse partition \"" + std::string(text) + "\"");
    parts.push_back(value);
    pos = comma + 1;
  }
  if (!parts.empty() && parts.back() != 0) parts.push_back(0);
  return Partition(std::move(parts));
}

int Partition::size() const noexcept {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const BoxSet& boxes) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : boxes) {
    if (!first) out += ' ';
    out += to_string(c);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Vertices

std::string_view to_string(VertexConfig c) noexcept {
  switch (c) {
    case VertexConfig::Type1: return "type1";
    case VertexConfig::Type2Box: return "type2-box";
    case VertexConfig::Type3: return "type3";
    case VertexConfig::Type4: return "type4";
    case VertexConfig::Type5: return "type5";
  }
  return "?";
}

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

struct ConfigRow {
  VertexConfig kind;
  VertexEdges edges;  // left, right, top, bottom
};

constexpr ConfigRow kConfigs[] = {
    {VertexConfig::Type1, {P, P, P, P}},
    {VertexConfig::Type2Box, {M, M, P, P}},
    {VertexConfig::Type3, {M, P, P, M}},
    {VertexConfig::Type4, {P, M, M, P}},
    {VertexConfig::Type5, {M, M, M, M}},
};

}  // namespace

std::optional<VertexConfig> classify_vertex(Sign left, Sign right, Sign top,
                                            Sign bottom) noexcept {
  const VertexEdges e{left, right, top, bottom};
  for (const auto& row : kConfigs)
    if (row.edges == e) return row.kind;
  return std::nullopt;
}

VertexEdges edges_of(VertexConfig c) noexcept {
  return kConfigs[static_cast<std::size_t>(c)].edges;
}

// ---------------------------------------------------------------------------
// IceModel

IceModel::IceModel(Partition lambda, int n, int s, std::vector<Sign> h, std::vector<Sign> v)
    : lambda_(std::move(lambda)), n_(n), s_(s), h_(std::move(h)), v_(std::move(v)) {
  if (n_ < 1 || s_ < 1) throw std::invalid_argument("ice model needs n >= 1 and s >= 1");
  if (h_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(s_ + 1))
    throw std::invalid_argument("horizontal edge grid must be n x (s+1)");
  if (v_.size() != static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(s_))
    throw std::invalid_argument("vertical edge grid must be (n+1) x s");
}

std::size_t IceModel::h_index(int row, int j) const {
  if (row < 1 || row > n_ || j < 0 || j > s_)
    throw std::out_of_range("horizontal edge (" + std::to_string(row) + "," +
                            std::to_string(j) + ") outside the lattice");
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(s_ + 1) +
         static_cast<std::size_t>(j);
}

std::size_t IceModel::v_index(int k, int col) const {
  if (k < 0 || k > n_ || col < 1 || col > s_)
    throw std::out_of_range("vertical edge (" + std::to_string(k) + "," +
                            std::to_string(col) + ") outside the lattice");
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(s_) +
         static_cast<std::size_t>(col - 1);
}

Sign IceModel::horizontal(int row, int j) const { return h_[h_index(row, j)]; }
Sign IceModel::vertical(int k, int col) const { return v_[v_index(k, col)]; }

VertexEdges IceModel::vertex_edges(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > s_)
    throw std::out_of_range("vertex " + to_string(Cell{row, col}) + " outside the lattice");
  return {horizontal(row, col - 1), horizontal(row, col), vertical(row, col),
          vertical(row - 1, col)};
}

// ---------------------------------------------------------------------------
// Boundary conditions

std::set<int> boundary_top_minus_columns(const Partition& lambda) {
  std::set<int> cols;
  for (int j = 1; j <= lambda.n(); ++j) cols.insert(lambda.first() + j - lambda[j]);
  return cols;
}

std::string_view to_string(Clause c) noexcept {
  switch (c) {
    case Clause::Dimension: return "dimension";
    case Clause::Vertex: return "vertex";
    case Clause::TopBoundary: return "top-boundary";
    case Clause::LeftBoundary: return "left-boundary";
    case Clause::BottomBoundary: return "bottom-boundary";
    case Clause::RightBoundary: return "right-boundary";
  }
  return "?";
}

std::vector<Violation> validate(const IceModel& m) {
  std::vector<Violation> out;
  const auto& lambda = m.lambda();
  const int n = m.rows();
  const int s = m.cols();
  if (n != lambda.n() || s != lambda.columns()) {
    out.push_back({Clause::Dimension, {0, 0},
                   "model is " + std::to_string(n) + "x" + std::to_string(s) + " but " +
                       lambda.to_string() + " requires " + std::to_string(lambda.n()) + "x" +
                       std::to_string(lambda.columns())});
    return out;
  }

  for (int i = 1; i <= n; ++i)
    for (int q = 1; q <= s; ++q) {
      const auto e = m.vertex_edges(i, q);
      if (!classify_vertex(e)) {
        std::string tuple{to_char(e.left), to_char(e.right), to_char(e.top), to_char(e.bottom)};
        out.push_back({Clause::Vertex, {i, q}, "invalid vertex (l,r,t,b)=" + tuple});
      }
    }

  const auto top = boundary_top_minus_columns(lambda);
  for (int q = 1; q <= s; ++q) {
    const Sign want = top.contains(q) ? Sign::Minus : Sign::Plus;
    if (m.vertical(n, q) != want)
      out.push_back({Clause::TopBoundary, {n, q},
                     std::string("top edge should be ") + to_char(want)});
    if (m.vertical(0, q) != Sign::Plus)
      out.push_back({Clause::BottomBoundary, {1, q}, "bottom edge should be +"});
  }
  for (int i = 1; i <= n; ++i) {
    if (m.horizontal(i, 0) != Sign::Plus)
      out.push_back({Clause::LeftBoundary, {i, 1}, "left edge should be +"});
    if (m.horizontal(i, s) != Sign::Minus)
      out.push_back({Clause::RightBoundary, {i, s}, "right edge should be -"});
  }
  return out;
}

BoxSet boxes(const IceModel& m) {
  BoxSet out;
  for (int i = 1; i <= m.rows(); ++i)
    for (int q = 1; q <= m.cols(); ++q)
      if (classify_vertex(m.vertex_edges(i, q)) == VertexConfig::Type2Box) out.insert({i, q});
  return out;
}

// ---------------------------------------------------------------------------
// Reconstruction from boxes

namespace {

// Edge grids under construction, with the right and bottom boundaries fixed.
struct Sweep {
  int n;
  int s;
  std::vector<Sign> h;
  std::vector<Sign> v;

  explicit Sweep(const Partition& lambda)
      : n(lambda.n()),
        s(lambda.columns()),
        h(static_cast<std::size_t>(n) * static_cast<std::size_t>(s + 1), Sign::Plus),
        v(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(s), Sign::Plus) {
    for (int i = 1; i <= n; ++i) hor(i, s) = Sign::Minus;
  }

  Sign& hor(int row, int j) {
    return h[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(s + 1) +
             static_cast<std::size_t>(j)];
  }
  Sign& ver(int k, int col) {
    return v[static_cast<std::size_t>(k) * static_cast<std::size_t>(s) +
             static_cast<std::size_t>(col - 1)];
  }

  // The vertex's right and bottom edges are known; write its left and top.
  void place(int row, int col, VertexConfig c) {
    const auto e = edges_of(c);
    hor(row, col - 1) = e.left;
    ver(row, col) = e.top;
  }

  IceModel finish(const Partition& lambda) && {
    return IceModel(lambda, n, s, std::move(h), std::move(v));
  }
};

// Unique non-box configuration with the given right and bottom edges.
VertexConfig forced_config(Sign right, Sign bottom) {
  if (right == Sign::Plus) return bottom == Sign::Plus ? VertexConfig::Type1 : VertexConfig::Type3;
  return bottom == Sign::Plus ? VertexConfig::Type4 : VertexConfig::Type5;
}

}  // namespace

std::optional<IceModel> try_from_boxes(const Partition& lambda, const BoxSet& b,
                                       std::string* why) {
  auto fail = [&](std::string reason) -> std::optional<IceModel> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };

  Sweep sw(lambda);
  for (const auto& c : b)
    if (c.row < 1 || c.row > sw.n || c.col < 1 || c.col > sw.s)
      return fail("box " + to_string(c) + " lies outside the lattice");

  for (int q = sw.s; q >= 1; --q) {
    for (int i = 1; i <= sw.n; ++i) {
      const Sign right = sw.hor(i, q);
      const Sign bottom = sw.ver(i - 1, q);
      if (b.contains({i, q})) {
        if (right != Sign::Minus || bottom != Sign::Plus)
          return fail("vertex " + to_string(Cell{i, q}) + " cannot be a box: right " +
                      to_char(right) + ", bottom " + to_char(bottom));
        sw.place(i, q, VertexConfig::Type2Box);
      } else {
        sw.place(i, q, forced_config(right, bottom));
      }
    }
  }

  for (int i = 1; i <= sw.n; ++i)
    if (sw.hor(i, 0) != Sign::Plus)
      return fail("left boundary edge of row " + std::to_string(i) + " is -");
  const auto top = boundary_top_minus_columns(lambda);
  for (int q = 1; q <= sw.s; ++q) {
    const Sign want = top.contains(q) ? Sign::Minus : Sign::Plus;
    if (sw.ver(sw.n, q) != want)
      return fail("top boundary edge of column " + std::to_string(q) + " is " +
                  to_char(sw.ver(sw.n, q)));
  }
  return std::move(sw).finish(lambda);
}

IceModel from_boxes(const Partition& lambda, const BoxSet& b) {
  std::string why;
  auto m = try_from_boxes(lambda, b, &why);
  if (!m) throw InconsistentBoxes("box set " + to_string(b) + " is not in M" +
                                  lambda.to_string() + ": " + why);
  return std::move(*m);
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t brute_force_candidates(const Partition& lambda) {
  const std::uint64_t cells =
      static_cast<std::uint64_t>(lambda.n()) * static_cast<std::uint64_t>(lambda.columns());
  const std::uint64_t k = static_cast<std::uint64_t>(lambda.size());
  if (k > cells) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // C(cells, k) built incrementally as C(cells - k + j, j); each step is exact.
  __extension__ typedef unsigned __int128 wide;
  wide acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc = acc * (cells - k + j) / j;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<IceModel> brute_force_enumerate(const Partition& lambda, std::uint64_t cap) {
  const auto candidates = brute_force_candidates(lambda);
  if (candidates > cap)
    throw CapExceeded("brute force over " + lambda.to_string() + " needs " +
                      std::to_string(candidates) + " candidate box sets (cap " +
                      std::to_string(cap) + ")");

  std::vector<Cell> cells;
  for (int i = 1; i <= lambda.n(); ++i)
    for (int q = 1; q <= lambda.columns(); ++q) cells.push_back({i, q});
  const auto k = static_cast<std::size_t>(lambda.size());

  std::vector<IceModel> out;
  std::vector<bool> chosen(cells.size(), false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    BoxSet b;
    for (std::size_t x = 0; x < cells.size(); ++x)
      if (chosen[x]) b.insert(cells[x]);
    if (auto m = try_from_boxes(lambda, b)) out.push_back(std::move(*m));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

std::vector<IceModel> enumerate_by_sweep(const Partition& lambda) {
  const auto top = boundary_top_minus_columns(lambda);
  std::vector<IceModel> out;
  Sweep sw(lambda);

  // Vertices in sweep order: columns right to left, rows bottom to top.
  std::function<void(int, int)> visit = [&](int q, int i) {
    if (q == 0) {
      out.push_back(IceModel(lambda, sw.n, sw.s, sw.h, sw.v));
      return;
    }
    const int next_q = i == sw.n ? q - 1 : q;
    const int next_i = i == sw.n ? 1 : i + 1;
    const Sign right = sw.hor(i, q);
    const Sign bottom = sw.ver(i - 1, q);

    auto admissible = [&] {
      if (q == 1 && sw.hor(i, 0) != Sign::Plus) return false;
      if (i == sw.n) {
        const Sign want = top.contains(q) ? Sign::Minus : Sign::Plus;
        if (sw.ver(i, q) != want) return false;
      }
      return true;
    };

    sw.place(i, q, forced_config(right, bottom));
    if (admissible()) visit(next_q, next_i);
    if (right == Sign::Minus && bottom == Sign::Plus) {
      sw.place(i, q, VertexConfig::Type2Box);
      if (admissible()) visit(next_q, next_i);
    }
  };
  visit(sw.s, 1);
  return out;
}

}  // namespace icecrystal
