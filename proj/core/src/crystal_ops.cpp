#include "icecrystal/crystal_ops.hpp"

#include <algorithm>
#include <cassert>

namespace icecrystal {

std::string to_string(const SignatureWord& w) {
  std::string out;
  for (const auto& t : w) out += t.moon == Moon::L ? 'L' : 'R';
  return out;
}

SignatureWord signature(const IceModel& m, int i) {
  if (i < 1 || i >= m.rows())
    throw std::out_of_range("color " + std::to_string(i) + " outside 1.." +
                            std::to_string(m.rows() - 1));
  SignatureWord w;
  // Column-major scan gives the (column, row) order directly.
  for (int q = 1; q <= m.cols(); ++q)
    for (int p : {i, i + 1})
      if (classify_vertex(m.vertex_edges(p, q)) == VertexConfig::Type2Box)
        w.push_back({p == i ? Moon::L : Moon::R, {p, q}});
  return w;
}

ReducedSignature reduce(const SignatureWord& w) {
  // Each R cancels the nearest unmatched L to its left.
  std::vector<std::size_t> open_l;
  std::vector<bool> alive(w.size(), true);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].moon == Moon::L) {
      open_l.push_back(k);
    } else if (!open_l.empty()) {
      alive[open_l.back()] = false;
      alive[k] = false;
      open_l.pop_back();
    }
  }
  ReducedSignature r;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!alive[k]) continue;
    r.surviving.push_back(w[k]);
    if (w[k].moon == Moon::R) {
      ++r.r_count;
      r.last_r = w[k].source;
    } else {
      ++r.l_count;
      if (!r.first_l) r.first_l = w[k].source;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::canonical() const {
  if (counts_.empty()) return *this;
  std::vector<int> c = counts_;
  const int last = c.back();
  for (auto& x : c) x -= last;
  return Weight(std::move(c));
}

Weight Weight::plus_root(int i, int times) const {
  std::vector<int> c = counts_;
  c.at(static_cast<std::size_t>(i - 1)) += times;
  c.at(static_cast<std::size_t>(i)) -= times;
  return Weight(std::move(c));
}

bool Weight::equivalent(const Weight& other) const {
  return counts_.size() == other.counts_.size() && canonical() == other.canonical();
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(counts_[k]);
  }
  return out + ")";
}

Weight weight(const IceModel& m) {
  std::vector<int> counts(static_cast<std::size_t>(m.rows()), 0);
  for (const auto& c : boxes(m)) ++counts[static_cast<std::size_t>(c.row - 1)];
  return Weight(std::move(counts));
}

int pairing(int i, const Weight& w) { return w[i] - w[i + 1]; }

int epsilon(const IceModel& m, int i) { return reduce(signature(m, i)).r_count; }
int phi(const IceModel& m, int i) { return reduce(signature(m, i)).l_count; }

// ---------------------------------------------------------------------------
// Operators

namespace {

// The 2x2 patch on rows i, i+1 and columns c, c+1. f_i takes the "low" state
// (box at (i, c+1)) to the "high" state (box at (i+1, c)); e_i is the inverse.
// The perimeter of the patch is the same in both states and only the four
// interior edges flip.
class Patch {
 public:
  Patch(const IceModel& m, int i, int c)
      : m_(m), i_(i), c_(c), h_(m.horizontal_edges().begin(), m.horizontal_edges().end()),
        v_(m.vertical_edges().begin(), m.vertical_edges().end()) {}

  void require_state(bool low) const {
    const Sign a = low ? Sign::Minus : Sign::Plus;
    const bool interior = m_.horizontal(i_, c_) == a && m_.horizontal(i_ + 1, c_) == -a &&
                          m_.vertical(i_, c_) == a && m_.vertical(i_, c_ + 1) == -a;
    const bool perimeter = m_.horizontal(i_, c_ + 1) == Sign::Minus &&
                           m_.vertical(i_ - 1, c_ + 1) == Sign::Plus &&
                           m_.horizontal(i_ + 1, c_ - 1) == Sign::Minus &&
                           m_.vertical(i_ + 1, c_) == Sign::Plus &&
                           m_.horizontal(i_, c_ - 1) == m_.vertical(i_ - 1, c_) &&
                           m_.horizontal(i_ + 1, c_ + 1) == m_.vertical(i_ + 1, c_ + 1);
    if (!interior || !perimeter)
      throw LocalPatchMismatch("unexpected local configuration around rows " +
                               std::to_string(i_) + "-" + std::to_string(i_ + 1) +
                               ", columns " + std::to_string(c_) + "-" +
                               std::to_string(c_ + 1));
  }

  IceModel flipped() && {
    flip_h(i_, c_);
    flip_h(i_ + 1, c_);
    flip_v(i_, c_);
    flip_v(i_, c_ + 1);
    return IceModel(m_.lambda(), m_.rows(), m_.cols(), std::move(h_), std::move(v_));
  }

 private:
  void flip_h(int row, int j) {
    auto& e = h_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(m_.cols() + 1) +
                 static_cast<std::size_t>(j)];
    e = -e;
  }
  void flip_v(int k, int col) {
    auto& e = v_[static_cast<std::size_t>(k) * static_cast<std::size_t>(m_.cols()) +
                 static_cast<std::size_t>(col - 1)];
    e = -e;
  }

  const IceModel& m_;
  int i_;
  int c_;
  std::vector<Sign> h_;
  std::vector<Sign> v_;
};

#ifndef NDEBUG
void cross_check(const IceModel& before, const IceModel& after, Cell from, Cell to) {
  BoxSet b = boxes(before);
  b.erase(from);
  b.insert(to);
  assert(try_from_boxes(before.lambda(), b) == std::optional<IceModel>(after));
}
#endif

}  // namespace

std::optional<Cell> f_moved_box(const IceModel& m, int i) {
  return reduce(signature(m, i)).first_l;
}

std::optional<Cell> e_moved_box(const IceModel& m, int i) {
  return reduce(signature(m, i)).last_r;
}

std::optional<IceModel> f_op(const IceModel& m, int i) {
  const auto u = f_moved_box(m, i);
  if (!u) return std::nullopt;
  if (u->col < 2) throw LocalPatchMismatch("f-movable box " + to_string(*u) + " in column 1");
  Patch patch(m, i, u->col - 1);
  patch.require_state(true);
  auto out = std::move(patch).flipped();
#ifndef NDEBUG
  cross_check(m, out, *u, {i + 1, u->col - 1});
#endif
  return out;
}

std::optional<IceModel> e_op(const IceModel& m, int i) {
  const auto v = e_moved_box(m, i);
  if (!v) return std::nullopt;
  if (v->col >= m.cols())
    throw LocalPatchMismatch("e-movable box " + to_string(*v) + " in the last column");
  Patch patch(m, i, v->col);
  patch.require_state(false);
  auto out = std::move(patch).flipped();
#ifndef NDEBUG
  cross_check(m, out, *v, {i, v->col + 1});
#endif
  return out;
}

}  // namespace icecrystal
