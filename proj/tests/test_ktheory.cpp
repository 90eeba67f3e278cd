#include "doctest.h"

#include "conehodge/catalog.hpp"
#include "conehodge/ktheory.hpp"
#include "conehodge/lcdef.hpp"

using namespace conehodge;

TEST_CASE("K_0 of cones over curves and surfaces has no twisted part") {
  for (int d = 1; d <= 5; ++d) {
    const auto desc = catalog_descriptor(CatalogSpec{{1}, {d}, std::nullopt});
    const auto series = k_zero(desc);
    CHECK(series.free_rank == 1);
    CHECK(series.contributions.empty());
    CHECK(series.non_free_part_zero());
    CHECK(series.label() == "K_0");
  }
  const auto p2 = k_zero(catalog_descriptor(parse_selector("P2")));
  CHECK(p2.free_rank == 1);
  CHECK(p2.non_free_part_zero());
  CHECK(p2.index_lo == 1);
  CHECK(p2.index_hi == 2);
}

TEST_CASE("K_0 picks up synthetic twisted classes verbatim") {
  auto desc = catalog_descriptor(parse_selector("P2"));
  desc.base.smooth = false;
  desc.base.entries[{1, 1}].values[1] = 2;
  const auto series = k_zero(desc);
  REQUIRE(series.contributions.size() == 1);
  CHECK(series.contributions[0].i == 1);
  CHECK(series.contributions[0].m == 1);
  CHECK(series.contributions[0].dim == 2);
  CHECK_FALSE(series.non_free_part_zero());
  // reproducible from the table
  CHECK(desc.base.dim(series.contributions[0].p, series.contributions[0].q,
                      series.contributions[0].m) == 2);
}

TEST_CASE("negative K-groups vanish on catalog cones") {
  const auto desc = catalog_descriptor(parse_selector("P1@2"));
  const auto k1 = k_negative(desc, 1);
  CHECK(k1.label() == "K_-1");
  CHECK(k1.free_rank == 0);
  CHECK(k1.contributions.empty());
  CHECK(k1.non_free_part_zero());
  CHECK_FALSE(k1.structurally_empty());  // range [0, 0]
}

TEST_CASE("structural vanishing beyond l = n + 1") {
  for (const char* selector : {"P1", "P2@2", "P1xP2@1,1"}) {
    const auto desc = catalog_descriptor(parse_selector(selector));
    const int n = desc.base.n;
    for (int l = n + 2; l <= n + 4; ++l) {
      const auto series = k_negative(desc, l);
      CHECK(series.structurally_empty());
      CHECK(series.contributions.empty());
      CHECK(series.tails.empty());
    }
    // l = n + 1 is the last structurally empty index range [0, -1].
    CHECK(k_negative(desc, n + 1).structurally_empty());
  }
  CHECK_THROWS_AS(k_negative(catalog_descriptor(parse_selector("P1")), 0), error);
}

TEST_CASE("K_-(n+1) agrees with the top-row tally from the table") {
  for (const char* selector : {"P1@3", "P2", "P1xP1@1,1"}) {
    const auto desc = catalog_descriptor(parse_selector(selector));
    const int n = desc.base.n;
    const auto series = k_negative(desc, n + 1);
    // sum_{m >= 1} dim(0, n, m), certified zero beyond the window.
    const GradedDimension& top = desc.base.entry(0, n);
    std::int64_t direct = 0;
    for (int m = 1; m <= top.window_hi; ++m) direct += top.resolve(m);
    CHECK(top.pos_tail.identically_zero());
    CHECK(series.window_total() == direct);
    CHECK(direct == 0);
  }
}

TEST_CASE("classical K_0 equals K_0 plus the Picard summand") {
  const auto desc = catalog_descriptor(parse_selector("P1@4"), /*classical=*/true);
  const auto classical = k_zero_classical(desc);
  const auto plain = k_zero(desc);
  CHECK(classical.free_rank == plain.free_rank);
  CHECK(classical.contributions == plain.contributions);
  REQUIRE(classical.pic.has_value());
  CHECK(classical.pic->values.empty());
  CHECK(classical.pic->pos_tail.identically_zero());
}

TEST_CASE("a non-normal section ring produces Picard classes") {
  auto desc = catalog_descriptor(parse_selector("P1@3"), /*classical=*/true);
  desc.projectively_normal = false;
  REQUIRE(desc.base.coordinate_ring.has_value());
  // Drop one section in degree 1: R_1 = h^0(O(3)) - 1.
  desc.base.coordinate_ring->values[1] -= 1;
  desc.base.seminormal = false;
  desc.base.smooth = false;
  const auto series = k_zero_classical(desc);
  REQUIRE(series.pic.has_value());
  CHECK(series.pic->resolve(1) == 1);
  CHECK(series.pic->resolve(2) == 0);
}

TEST_CASE("negative Picard dimensions are rejected as corrupt") {
  auto desc = catalog_descriptor(parse_selector("P1@2"), /*classical=*/true);
  desc.projectively_normal = false;
  desc.base.coordinate_ring->values[1] += 3;  // R_1 > h^0
  CHECK_THROWS_AS(k_zero_classical(desc), error);
}

TEST_CASE("classical mode requires ring data") {
  auto desc = catalog_descriptor(parse_selector("P1@2"), /*classical=*/true);
  desc.projectively_normal = false;
  desc.base.coordinate_ring.reset();
  CHECK_THROWS_AS(k_zero_classical(desc), error);
  auto plain = catalog_descriptor(parse_selector("P1@2"));
  CHECK_THROWS_AS(k_zero_classical(plain), error);
}

TEST_CASE("higher Adams pieces follow the twisted formula") {
  const auto desc = catalog_descriptor(parse_selector("P2"));
  const auto series = higher_k_piece(desc, 1, 3);
  CHECK(series.label() == "K_1^(3)");
  CHECK(series.index_lo == 2);
  CHECK(series.index_hi == 2);
  CHECK(series.contributions.empty());  // h^1(Omega^2(m)) = 0 for m >= 1
  CHECK(series.non_free_part_zero());

  CHECK_THROWS_AS(higher_k_piece(desc, 1, 4), error);  // i - 1 > n
  CHECK_THROWS_AS(higher_k_piece(desc, 1, 2), error);  // i < l + 2
  CHECK_THROWS_AS(higher_k_piece(desc, 0, 3), error);

  auto synthetic = desc;
  synthetic.base.smooth = false;
  synthetic.base.entries[{2, 1}].values[2] = 4;
  const auto echoed = higher_k_piece(synthetic, 1, 3);
  REQUIRE(echoed.contributions.size() == 1);
  CHECK(echoed.contributions[0].i == 2);
  CHECK(echoed.contributions[0].m == 2);
  CHECK(echoed.contributions[0].dim == 4);
}

TEST_CASE("filtration bounds certify the Q-relative comparison on catalogs") {
  for (const char* selector : {"P2", "P1xP2@1,1", "P3@2"}) {
    const auto desc = catalog_descriptor(parse_selector(selector));
    CHECK(k_zero(desc).q_relative_exact);
    for (int l = 1; l <= desc.base.n + 1; ++l) {
      CHECK(k_negative(desc, l).q_relative_exact);
    }
  }
  // A synthetic class one filtration step below the K_0 cells makes the
  // bound nonzero.
  auto desc = catalog_descriptor(parse_selector("P2"));
  desc.base.smooth = false;
  desc.base.entries[{0, 1}].values[1] = 1;  // companion of the (1, 1) cell at j = 1
  const auto series = k_zero(desc);
  REQUIRE_FALSE(series.filtration_bounds.empty());
  CHECK_FALSE(series.q_relative_exact);
  CHECK(series.filtration_bounds[0].j == 1);
  CHECK(series.filtration_bounds[0].window_total == 1);
}

TEST_CASE("pre-All cones have vanishing K-theory in every negative degree") {
  for (const char* selector : {"P1@5", "P2@2", "P1xP1xP1@1,2,1"}) {
    const auto desc = catalog_descriptor(parse_selector(selector));
    REQUIRE(pre_p_dubois_level(desc).all);
    CHECK(k_zero(desc).non_free_part_zero());
    for (int l = 1; l <= desc.base.n + 1; ++l) {
      CHECK(k_negative(desc, l).non_free_part_zero());
    }
  }
}

TEST_CASE("undeclared positive tails abort the series") {
  auto desc = catalog_descriptor(parse_selector("P2"));
  desc.base.entries[{1, 1}].pos_tail = Tail::undeclared();
  CHECK_THROWS_AS(k_zero(desc), error);
}
