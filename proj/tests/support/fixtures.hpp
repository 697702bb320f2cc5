#pragma once

// Models written out edge by edge by hand, and independent reference
// computations used to freeze expected values. Nothing here calls into the
// code under test except the IceModel constructor.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "icecrystal/ice_model.hpp"

namespace fixtures {

using icecrystal::IceModel;
using icecrystal::Partition;
using icecrystal::Sign;

/// h_rows: n strings of s+1 signs, row 1 first. v_rows: n+1 strings of s
/// signs, bottom boundary first.
inline IceModel model_from_rows(const Partition& lambda, const std::vector<std::string>& h_rows,
                                const std::vector<std::string>& v_rows) {
  std::vector<Sign> h;
  std::vector<Sign> v;
  for (const auto& r : h_rows)
    for (char c : r) h.push_back(c == '+' ? Sign::Plus : Sign::Minus);
  for (const auto& r : v_rows)
    for (char c : r) v.push_back(c == '+' ? Sign::Plus : Sign::Minus);
  const int n = static_cast<int>(h_rows.size());
  const int s = static_cast<int>(v_rows.front().size());
  return IceModel(lambda, n, s, std::move(h), std::move(v));
}

/// f_1 of the highest weight model of (2,1,0): boxes at (2,3), (1,5), (2,5).
inline IceModel lowered_hw() {
  return model_from_rows(Partition({2, 1, 0}), {"++++--", "++----", "+-+-+-"},
                         {"+++++", "+++-+", "+-+-+", "-+-+-"});
}

/// A model of (2,1,0) with sigma_1 = RL and sigma_2 = LR: boxes at (2,3),
/// (3,4), (1,5).
inline IceModel worked_example() {
  return model_from_rows(Partition({2, 1, 0}), {"++++--", "++--+-", "+-+---"},
                         {"+++++", "+++-+", "+-++-", "-+-+-"});
}

/// The worked example after e_1: boxes at (1,4), (3,4), (1,5).
inline IceModel worked_example_raised() {
  return model_from_rows(Partition({2, 1, 0}), {"+++---", "++-++-", "+-+---"},
                         {"+++++", "++-++", "+-++-", "-+-+-"});
}

// ---------------------------------------------------------------------------
// Reference computations

/// Semistandard fillings counted by trying every filling of the shape with
/// values 1..n.
inline std::uint64_t count_ssyt_by_fillings(const std::vector<int>& shape, int n) {
  std::vector<std::vector<int>> rows;
  for (int p : shape)
    if (p > 0) rows.emplace_back(static_cast<std::size_t>(p), 1);
  std::size_t cells = 0;
  for (const auto& r : rows) cells += r.size();

  auto semistandard = [&] {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
        if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
      }
    return true;
  };

  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      count += semistandard() ? 1 : 0;
      return;
    }
    const auto next_r = c + 1 == rows[r].size() ? r + 1 : r;
    const auto next_c = c + 1 == rows[r].size() ? 0 : c + 1;
    for (int x = 1; x <= n; ++x) {
      rows[r][c] = x;
      fill(next_r, next_c);
    }
  };
  if (cells == 0) return 1;
  fill(0, 0);
  return count;
}

/// Every reduced form reachable by deleting adjacent "LR" pairs in any order,
/// encoded as (number of R, number of L).
inline std::set<std::pair<int, int>> reductions_all_orders(const std::string& word) {
  std::set<std::pair<int, int>> out;
  std::set<std::string> seen;
  std::function<void(const std::string&)> go = [&](const std::string& w) {
    if (!seen.insert(w).second) return;
    bool reduced = true;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] == 'L' && w[k + 1] == 'R') {
        reduced = false;
        go(w.substr(0, k) + w.substr(k + 2));
      }
    if (reduced) {
      const auto r = static_cast<int>(std::count(w.begin(), w.end(), 'R'));
      out.insert({r, static_cast<int>(w.size()) - r});
    }
  };
  go(word);
  return out;
}

/// All partitions with n rows (1 <= n <= max_n), lambda_1 <= max_part and
/// lambda_n = 0.
inline std::vector<Partition> envelope(int max_n, int max_part) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int k, int bound) {
      if (k == n - 1) {
        out.emplace_back(parts);
        return;
      }
      for (int x = bound; x >= 0; --x) {
        parts[static_cast<std::size_t>(k)] = x;
        go(k + 1, x);
      }
    };
    go(0, max_part);
  }
  return out;
}

}  // namespace fixtures
