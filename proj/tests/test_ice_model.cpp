#include <doctest.h>

#include "icecrystal/ice_model.hpp"
#include "support/fixtures.hpp"

using namespace icecrystal;

namespace {
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
}  // namespace

TEST_CASE("sign negation is an involution") {
  CHECK(-P == M);
  CHECK(-M == P);
  CHECK(-(-P) == P);
  CHECK(sign_from_string("+") == P);
  CHECK_THROWS_AS(sign_from_string("0"), std::invalid_argument);
}

TEST_CASE("partition parsing and invariants") {
  CHECK(Partition::parse("2,1,0").parts() == std::vector<int>{2, 1, 0});
  CHECK(Partition::parse("2,1").parts() == std::vector<int>{2, 1, 0});
  CHECK(Partition::parse("0").parts() == std::vector<int>{0});
  CHECK(Partition::parse("3,1,0").columns() == 6);
  CHECK(Partition::parse("2,1,0").size() == 3);
  CHECK_THROWS_AS(Partition::parse("1,2,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,-1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 1}), std::invalid_argument);
}

TEST_CASE("classify_vertex accepts exactly the five configurations") {
  CHECK(classify_vertex(M, M, P, P) == VertexConfig::Type2Box);
  CHECK(classify_vertex(P, P, P, P) == VertexConfig::Type1);
  CHECK(classify_vertex(M, P, P, M) == VertexConfig::Type3);
  CHECK(classify_vertex(P, M, M, P) == VertexConfig::Type4);
  CHECK(classify_vertex(M, M, M, M) == VertexConfig::Type5);
  CHECK_FALSE(classify_vertex(P, P, M, M).has_value());

  int valid = 0;
  for (Sign l : {P, M})
    for (Sign r : {P, M})
      for (Sign t : {P, M})
        for (Sign b : {P, M})
          if (auto c = classify_vertex(l, r, t, b)) {
            ++valid;
            CHECK(edges_of(*c) == VertexEdges{l, r, t, b});
          }
  CHECK(valid == 5);
}

TEST_CASE("vertex_edges reads the shared edge grids") {
  const auto m = fixtures::lowered_hw();
  CHECK(m.vertex_edges(3, 1) == VertexEdges{P, M, M, P});
  CHECK(m.vertex_edges(1, 5) == VertexEdges{M, M, P, P});
  for (int i = 1; i <= m.rows(); ++i)
    for (int q = 1; q < m.cols(); ++q) {
      CHECK(m.vertex_edges(i, q).right == m.vertex_edges(i, q + 1).left);
    }
  for (int i = 1; i < m.rows(); ++i)
    for (int q = 1; q <= m.cols(); ++q) {
      CHECK(m.vertex_edges(i, q).top == m.vertex_edges(i + 1, q).bottom);
    }
  CHECK_THROWS_AS(m.vertex_edges(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.vertex_edges(1, 6), std::out_of_range);
  CHECK_THROWS_AS(m.vertex_edges(4, 1), std::out_of_range);
}

TEST_CASE("top boundary minus columns") {
  CHECK(boundary_top_minus_columns(Partition({2, 1, 0})) == std::set<int>{1, 3, 5});
  CHECK(boundary_top_minus_columns(Partition({0, 0})) == std::set<int>{1, 2});
  CHECK(boundary_top_minus_columns(Partition({3, 1, 0})) == std::set<int>{1, 4, 6});
  CHECK(boundary_top_minus_columns(Partition({2, 2, 0})) == std::set<int>{1, 2, 5});
}

TEST_CASE("validate") {
  const auto m = fixtures::lowered_hw();
  CHECK(validate(m).empty());

  SUBCASE("bottom boundary flipped") {
    std::vector<Sign> v(m.vertical_edges().begin(), m.vertical_edges().end());
    v[0] = M;  // bottom edge of vertex (1,1)
    const IceModel bad(m.lambda(), 3, 5, {m.horizontal_edges().begin(), m.horizontal_edges().end()}, v);
    const auto violations = validate(bad);
    REQUIRE_FALSE(violations.empty());
    bool bottom = false;
    for (const auto& x : violations) bottom = bottom || x.clause == Clause::BottomBoundary;
    CHECK(bottom);
  }

  SUBCASE("wrong partition") {
    const IceModel other(Partition({2, 2, 0}), 3, 5,
                         {m.horizontal_edges().begin(), m.horizontal_edges().end()},
                         {m.vertical_edges().begin(), m.vertical_edges().end()});
    const auto violations = validate(other);
    REQUIRE_FALSE(violations.empty());
    for (const auto& x : violations) CHECK(x.clause == Clause::TopBoundary);
    // columns 2 and 3 differ between {1,3,5} and {1,2,5}
    CHECK(violations.size() == 2);
  }

  SUBCASE("dimension mismatch is reported, not thrown") {
    const IceModel other(Partition({3, 1, 0}), 3, 5,
                         {m.horizontal_edges().begin(), m.horizontal_edges().end()},
                         {m.vertical_edges().begin(), m.vertical_edges().end()});
    const auto violations = validate(other);
    REQUIRE(violations.size() == 1);
    CHECK(violations.front().clause == Clause::Dimension);
  }
}

TEST_CASE("boxing map") {
  CHECK(boxes(fixtures::lowered_hw()) == BoxSet{{2, 3}, {1, 5}, {2, 5}});
  CHECK(boxes(fixtures::worked_example()) == BoxSet{{2, 3}, {3, 4}, {1, 5}});
  CHECK(boxes(from_boxes(Partition({0, 0, 0}), {})).empty());
}

TEST_CASE("from_boxes reconstructs hand-written models") {
  const Partition lambda({2, 1, 0});
  CHECK(from_boxes(lambda, {{2, 3}, {1, 5}, {2, 5}}) == fixtures::lowered_hw());
  CHECK(from_boxes(lambda, {{2, 3}, {3, 4}, {1, 5}}) == fixtures::worked_example());
  CHECK(from_boxes(lambda, {{1, 4}, {3, 4}, {1, 5}}) == fixtures::worked_example_raised());

  const auto empty = from_boxes(Partition({0, 0}), {});
  CHECK(empty.rows() == 2);
  CHECK(empty.cols() == 2);
  CHECK(validate(empty).empty());

  std::string why;
  CHECK_FALSE(try_from_boxes(lambda, {{1, 1}}, &why).has_value());
  CHECK_FALSE(why.empty());
  CHECK_THROWS_AS(from_boxes(lambda, {{1, 1}}), InconsistentBoxes);
  CHECK_FALSE(try_from_boxes(lambda, {{4, 1}}).has_value());
  CHECK_FALSE(try_from_boxes(lambda, {}).has_value());
}

TEST_CASE("brute force enumeration") {
  CHECK(brute_force_enumerate(Partition({0, 0, 0})).size() == 1);
  CHECK(brute_force_enumerate(Partition({1, 0})).size() == 2);
  CHECK(brute_force_enumerate(Partition({2, 1, 0})).size() == 8);
  CHECK(fixtures::count_ssyt_by_fillings({1, 0}, 2) == 2);
  CHECK(fixtures::count_ssyt_by_fillings({2, 1, 0}, 3) == 8);

  CHECK(brute_force_candidates(Partition({2, 1, 0})) == 455);  // C(15, 3)
  CHECK_THROWS_AS(brute_force_enumerate(Partition({2, 1, 0}), 100), CapExceeded);
}

TEST_CASE("enumeration invariants over small partitions") {
  for (const auto& lambda : fixtures::envelope(3, 3)) {
    CAPTURE(lambda.to_string());
    const auto models = brute_force_enumerate(lambda);
    const auto swept = enumerate_by_sweep(lambda);
    CHECK(models.size() == swept.size());
    CHECK(models.size() == fixtures::count_ssyt_by_fillings(lambda.parts(), lambda.n()));
    for (const auto& m : swept) {
      CHECK(validate(m).empty());
      const auto b = boxes(m);
      CHECK(static_cast<int>(b.size()) == lambda.size());
      for (const auto& c : b) CHECK(c.col > 1);
      CHECK(from_boxes(lambda, b) == m);
    }
  }
}
