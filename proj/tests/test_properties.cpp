// Randomised checks. Seeds are fixed so failures reproduce.
#include <doctest.h>

#include <random>

#include "icecrystal/crystal_graph.hpp"
#include "icecrystal/io.hpp"
#include "icecrystal/tableau.hpp"
#include "support/fixtures.hpp"

using namespace icecrystal;

namespace {

Partition random_partition(std::mt19937& rng, int max_n, int max_part) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  const int n = pick_n(rng);
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  int bound = max_part;
  for (int k = 0; k + 1 < n; ++k) {
    parts[static_cast<std::size_t>(k)] = std::uniform_int_distribution<int>(0, bound)(rng);
    bound = parts[static_cast<std::size_t>(k)];
  }
  return Partition(parts);
}

// Positions of the edges that differ between two models of the same size.
std::vector<std::pair<char, std::size_t>> diff(const IceModel& a, const IceModel& b) {
  std::vector<std::pair<char, std::size_t>> out;
  for (std::size_t k = 0; k < a.horizontal_edges().size(); ++k)
    if (a.horizontal_edges()[k] != b.horizontal_edges()[k]) out.emplace_back('h', k);
  for (std::size_t k = 0; k < a.vertical_edges().size(); ++k)
    if (a.vertical_edges()[k] != b.vertical_edges()[k]) out.emplace_back('v', k);
  return out;
}

}  // namespace

TEST_CASE("random walks: operators are local, inverse and move one box") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 40; ++trial) {
    const auto lambda = random_partition(rng, 5, 3);
    if (lambda.n() < 2) continue;
    CAPTURE(lambda.to_string());
    const int s = lambda.columns();
    IceModel m = highest_weight_model(lambda);
    std::uniform_int_distribution<int> colour(1, lambda.n() - 1);
    std::bernoulli_distribution down(0.7);
    for (int step = 0; step < 30; ++step) {
      const int i = colour(rng);
      const bool use_f = down(rng);
      const auto next = use_f ? f_op(m, i) : e_op(m, i);
      if (!next) continue;
      CHECK(validate(*next).empty());
      CHECK((use_f ? e_op(*next, i) : f_op(*next, i)) == std::optional<IceModel>(m));

      const auto moved = use_f ? f_moved_box(m, i) : e_moved_box(m, i);
      REQUIRE(moved);
      const int c = use_f ? moved->col - 1 : moved->col;
      // the four interior edges of the patch on rows i, i+1 and columns c, c+1
      const std::set<std::pair<char, std::size_t>> patch = {
          {'h', static_cast<std::size_t>((i - 1) * (s + 1) + c)},
          {'h', static_cast<std::size_t>(i * (s + 1) + c)},
          {'v', static_cast<std::size_t>(i * s + c - 1)},
          {'v', static_cast<std::size_t>(i * s + c)}};
      const auto changed = diff(m, *next);
      CHECK(std::set(changed.begin(), changed.end()) == patch);

      const auto b0 = boxes(m);
      const auto b1 = boxes(*next);
      std::vector<Cell> gone;
      std::set_difference(b0.begin(), b0.end(), b1.begin(), b1.end(), std::back_inserter(gone));
      CHECK(gone == std::vector<Cell>{*moved});
      CHECK(b1.size() == b0.size());
      for (const auto& cell : b1) CHECK(cell.col > 1);
      m = *next;
    }
  }
}

TEST_CASE("boxes and from_boxes are mutually inverse") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto lambda = random_partition(rng, 4, 3);
    CAPTURE(lambda.to_string());
    const auto all = enumerate_by_sweep(lambda);
    const auto& m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    CHECK(from_boxes(lambda, boxes(m)) == m);
    CHECK(model_from_json(model_to_json(m)) == m);

    // a random box set of the right size is realised iff it is one of the models
    std::set<BoxSet> valid;
    for (const auto& x : all) valid.insert(boxes(x));
    BoxSet random;
    std::uniform_int_distribution<int> row(1, lambda.n());
    std::uniform_int_distribution<int> col(1, lambda.columns());
    while (static_cast<int>(random.size()) < lambda.size()) random.insert({row(rng), col(rng)});
    CHECK(try_from_boxes(lambda, random).has_value() == valid.contains(random));
  }
}

TEST_CASE("epsilon and phi agree with graph paths") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto lambda = random_partition(rng, 4, 3);
    const auto c = generate(lambda);
    for (NodeId b = 0; b < c.models.size(); ++b)
      for (int i = 1; i < lambda.n(); ++i) {
        int up = 0;
        for (auto x = c.graph.e(b, i); x; x = c.graph.e(*x, i)) ++up;
        int dn = 0;
        for (auto x = c.graph.f(b, i); x; x = c.graph.f(*x, i)) ++dn;
        CHECK(epsilon(c.models[b], i) == up);
        CHECK(phi(c.models[b], i) == dn);
      }
  }
}

TEST_CASE("isomorphism is reflexive and symmetric") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto lambda = random_partition(rng, 4, 3);
    const auto a = generate(lambda).graph;
    const auto b = tableau_crystal(lambda, lambda.n()).graph;
    CHECK(crystal_isomorphic(a, a).isomorphic);
    CHECK(crystal_isomorphic(a, b).isomorphic);
    const auto back = crystal_isomorphic(b, a);
    REQUIRE(back.isomorphic);
    const auto fwd = crystal_isomorphic(a, b);
    for (NodeId x = 0; x < fwd.mapping.size(); ++x) CHECK(back.mapping[fwd.mapping[x]] == x);
  }
}
