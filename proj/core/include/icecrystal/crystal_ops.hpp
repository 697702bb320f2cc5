#pragma once

// Crystal structure on M(lambda): i-signatures, the operators e_i / f_i as
// local 2x2 rewrites, weights, epsilon / phi and the type A pairing.

#include <optional>
#include <string>
#include <vector>

#include "icecrystal/ice_model.hpp"

namespace icecrystal {

/// L marks a box in row i, R a box in row i+1.
enum class Moon : std::uint8_t { L, R };

struct SignatureToken {
  Moon moon;
  Cell source;
  friend bool operator==(const SignatureToken&, const SignatureToken&) = default;
};

/// Boxes of rows i and i+1 ordered by column, ties broken by row.
using SignatureWord = std::vector<SignatureToken>;

std::string to_string(const SignatureWord& w);

/// The word left after deleting adjacent "L R" pairs until it reads R^m L^k.
struct ReducedSignature {
  int r_count = 0;  // epsilon_i
  int l_count = 0;  // phi_i
  std::optional<Cell> first_l;
  std::optional<Cell> last_r;
  SignatureWord surviving;
};

/// Throws std::out_of_range unless 1 <= i <= n-1.
SignatureWord signature(const IceModel& m, int i);
ReducedSignature reduce(const SignatureWord& w);

/// Per-row box counts a_1..a_n. Two weights are the same element of P when
/// they differ by a constant vector.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> counts) : counts_(std::move(counts)) {}

  const std::vector<int>& counts() const noexcept { return counts_; }
  int size() const noexcept { return static_cast<int>(counts_.size()); }
  int operator[](int i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }

  /// Representative with a_n = 0.
  Weight canonical() const;
  /// Adds alpha_i = eps_i - eps_{i+1} `times` times.
  Weight plus_root(int i, int times = 1) const;

  /// Equality in P.
  bool equivalent(const Weight& other) const;
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> counts_;
};

Weight weight(const IceModel& m);

/// <h_i, w> = a_i - a_{i+1}.
int pairing(int i, const Weight& w);

/// <h_j, alpha_i> for type A_{n-1}.
constexpr int cartan_entry(int j, int i) noexcept {
  return 2 * (i == j) - (i + 1 == j) - (i == j + 1);
}

int epsilon(const IceModel& m, int i);
int phi(const IceModel& m, int i);

/// Thrown when the neighbourhood of the box an operator moves does not have
/// the shape every member of M(lambda) is known to have there. Indicates a
/// bug or a model that is not in M(lambda).
class LocalPatchMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// f_i: moves the first surviving L box from (i, q) to (i+1, q-1).
std::optional<IceModel> f_op(const IceModel& m, int i);
/// e_i: moves the last surviving R box from (i+1, q) to (i, q+1).
std::optional<IceModel> e_op(const IceModel& m, int i);

/// Box moved by f_i / e_i, if the operator is defined.
std::optional<Cell> f_moved_box(const IceModel& m, int i);
std::optional<Cell> e_moved_box(const IceModel& m, int i);

}  // namespace icecrystal
