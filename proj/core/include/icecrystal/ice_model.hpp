#pragma once

// Five-vertex ice models with the boundary conditions M(lambda).
//
// Coordinates follow the usual convention for these lattices: vertex (i, j)
// sits in row i and column j, rows are numbered 1..n from the BOTTOM of the
// picture to the top, columns 1..s from left to right.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icecrystal {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Parses "+" or "-"; throws std::invalid_argument otherwise.
Sign sign_from_string(std::string_view text);

/// Weakly decreasing sequence of nonnegative integers whose last part is 0.
/// The number of parts is the number of rows n of the ice models.
class Partition {
 public:
  /// Throws std::invalid_argument unless parts is nonempty, nonnegative,
  /// weakly decreasing and ends in 0.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,0". A trailing 0 is appended when the last part is nonzero.
  static Partition parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(parts_.size()); }
  /// lambda_i for 1 <= i <= n.
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  int first() const noexcept { return parts_.front(); }
  int size() const noexcept;  // |lambda|
  /// Columns of the models in M(lambda): lambda_1 + n.
  int columns() const noexcept { return first() + n(); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A lattice position (row p, column q).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// Positions of the type-2 vertices of a model, ordered by (row, column).
using BoxSet = std::set<Cell>;

std::string to_string(const BoxSet& boxes);

enum class VertexConfig : std::uint8_t { Type1, Type2Box, Type3, Type4, Type5 };

std::string_view to_string(VertexConfig c) noexcept;

struct VertexEdges {
  Sign left;
  Sign right;
  Sign top;
  Sign bottom;
  friend bool operator==(const VertexEdges&, const VertexEdges&) = default;
};

/// The five admissible vertices; every other sign tuple yields nullopt.
std::optional<VertexConfig> classify_vertex(Sign left, Sign right, Sign top,
                                            Sign bottom) noexcept;
inline std::optional<VertexConfig> classify_vertex(const VertexEdges& e) noexcept {
  return classify_vertex(e.left, e.right, e.top, e.bottom);
}

/// The edges of a given configuration, (left, right, top, bottom).
VertexEdges edges_of(VertexConfig c) noexcept;

/// An n x s lattice of edge signs, together with the partition it is meant to
/// satisfy. Horizontal and vertical edges are stored once each, so adjacent
/// vertices always agree on their shared edge.
///
///   horizontal(i, j), 0 <= j <= s : left edge of vertex (i, j+1); j = s is
///                                   the right boundary edge of row i.
///   vertical(k, q),   0 <= k <= n : bottom edge of vertex (k+1, q); k = n is
///                                   the top boundary edge of column q.
class IceModel {
 public:
  /// h has n*(s+1) entries (row 1 first), v has (n+1)*s entries (k = 0
  /// first). Throws std::invalid_argument on size mismatch.
  IceModel(Partition lambda, int n, int s, std::vector<Sign> h, std::vector<Sign> v);

  const Partition& lambda() const noexcept { return lambda_; }
  int rows() const noexcept { return n_; }
  int cols() const noexcept { return s_; }

  Sign horizontal(int row, int j) const;
  Sign vertical(int k, int col) const;

  /// (left, right, top, bottom) of vertex (row, col), 1-based.
  /// Throws std::out_of_range for indices outside the lattice.
  VertexEdges vertex_edges(int row, int col) const;

  std::span<const Sign> horizontal_edges() const noexcept { return h_; }
  std::span<const Sign> vertical_edges() const noexcept { return v_; }

  friend bool operator==(const IceModel&, const IceModel&) = default;

 private:
  std::size_t h_index(int row, int j) const;
  std::size_t v_index(int k, int col) const;

  Partition lambda_;
  int n_;
  int s_;
  std::vector<Sign> h_;
  std::vector<Sign> v_;
};

/// Columns q = lambda_1 + j - lambda_j, j = 1..n, carrying a minus on the top
/// boundary.
std::set<int> boundary_top_minus_columns(const Partition& lambda);

enum class Clause : std::uint8_t {
  Dimension,
  Vertex,
  TopBoundary,
  LeftBoundary,
  BottomBoundary,
  RightBoundary,
};

std::string_view to_string(Clause c) noexcept;

struct Violation {
  Clause clause;
  Cell where;  // {0, 0} when the violation is not tied to a vertex
  std::string message;
};

/// Empty iff m is a five-vertex model in M(m.lambda()).
std::vector<Violation> validate(const IceModel& m);

/// Positions of all type-2 vertices.
BoxSet boxes(const IceModel& m);

/// Rebuilds the unique member of M(lambda) whose box set is `b`, sweeping
/// columns right to left and each column bottom to top. Returns nullopt when
/// no such model exists; `why` receives a short reason if non-null.
std::optional<IceModel> try_from_boxes(const Partition& lambda, const BoxSet& b,
                                       std::string* why = nullptr);

class InconsistentBoxes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// As try_from_boxes, throwing InconsistentBoxes on failure.
IceModel from_boxes(const Partition& lambda, const BoxSet& b);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

/// Number of candidate box sets brute_force_enumerate would try:
/// C(n * s, |lambda|), saturating at UINT64_MAX.
std::uint64_t brute_force_candidates(const Partition& lambda);

/// Tries every set of |lambda| lattice positions and keeps those accepted by
/// try_from_boxes. Throws CapExceeded when the candidate count exceeds `cap`.
std::vector<IceModel> brute_force_enumerate(const Partition& lambda,
                                            std::uint64_t cap = kDefaultBruteForceCap);

/// Enumerates all of M(lambda) by backtracking over the sweep: every vertex
/// whose right and bottom edges are (-, +) is either a box or of type 4, all
/// others are forced. Does not assume the number of boxes.
std::vector<IceModel> enumerate_by_sweep(const Partition& lambda);

}  // namespace icecrystal
