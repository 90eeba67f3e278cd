#include "doctest.h"

#include "conehodge/catalog.hpp"
#include "conehodge/table.hpp"

using namespace conehodge;

namespace {

GradedDimension window_only(int lo, int hi, std::map<int, std::int64_t> values) {
  GradedDimension g;
  g.window_lo = lo;
  g.window_hi = hi;
  g.values = std::move(values);
  return g;
}

}  // namespace

TEST_CASE("resolve inside the window and through tails") {
  GradedDimension g = window_only(-2, 2, {{-1, 4}, {2, 7}});
  g.pos_tail = Tail::polynomial(Polynomial::linear(3, 1));  // 3m + 1
  g.neg_tail = Tail::zero();
  CHECK(g.resolve(-1) == 4);
  CHECK(g.resolve(0) == 0);  // absent window key
  CHECK(g.resolve(2) == 7);  // window wins at the edge
  CHECK(g.resolve(3) == 10);
  CHECK(g.resolve(100) == 301);
  CHECK(g.resolve(-3) == 0);
  CHECK(g.resolve(-50) == 0);
}

TEST_CASE("undeclared and corrupt tails are refused") {
  GradedDimension g = window_only(0, 2, {{0, 1}});
  CHECK_THROWS_AS(g.resolve(3), error);   // undeclared positive
  CHECK_THROWS_AS(g.resolve(-1), error);  // undeclared negative
  g.pos_tail = Tail::polynomial(Polynomial::linear(-1, 0));  // -m: negative beyond m = 0
  CHECK_THROWS_AS(g.resolve(5), error);
  g.pos_tail = Tail::polynomial(Polynomial({Rational(1, 2)}));  // non-integer
  CHECK_THROWS_AS(g.resolve(5), error);
}

TEST_CASE("vanishing certification along rays") {
  GradedDimension g = window_only(-3, 3, {{-2, 1}, {1, 2}});
  g.pos_tail = Tail::zero();
  g.neg_tail = Tail::zero();
  std::int64_t m = 0, v = 0;
  CHECK_FALSE(g.vanishes_from(-1, -1, &m, &v));
  CHECK(m == -2);
  CHECK(v == 1);
  CHECK(g.vanishes_from(-3, -1));  // below the nonzero cell, zero tail
  CHECK_FALSE(g.vanishes_from(1, +1, &m, &v));
  CHECK(m == 1);

  GradedDimension h = window_only(-2, 2, {});
  h.neg_tail = Tail::polynomial(Polynomial::linear(-1, -2));  // -m - 2: nonzero for m < -2
  h.pos_tail = Tail::zero();
  CHECK_FALSE(h.vanishes_from(-1, -1, &m, &v));
  CHECK(m == -3);
  CHECK(v == 1);

  GradedDimension u = window_only(-2, 2, {});
  CHECK_THROWS_AS(u.vanishes_from(-1, -1), error);  // undeclared tail consulted
}

TEST_CASE("resolve_dim spec examples") {
  const auto [p2, p2op] = projective_space_table(2, 1);
  CHECK(p2.dim(0, 0, 3) == 10);
  const auto [p1, p1op] = projective_space_table(1, 1);
  CHECK(p1.dim(1, 1, 0) == 1);
  CHECK(p1.dim(0, 1, 100) == 0);  // beyond the window, zero tail
  CHECK_THROWS_AS(p2.dim(3, 0, 0), error);
  CHECK_THROWS_AS(p2.dim(0, -1, 0), error);
}

TEST_CASE("validate_table accepts catalog tables") {
  for (const char* selector : {"P1@2", "P2", "P1xP2@1,1"}) {
    const auto [table, op] = make_catalog_table(parse_selector(selector));
    CHECK(validate_table(table).empty());
    CHECK(validate_operator(table, op).empty());
  }
}

TEST_CASE("betti-sum violation from a single altered cell") {
  auto [table, op] = projective_space_table(2, 1);
  table.entries[{1, 1}].values[0] = 2;
  const auto report = validate_table(table);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "betti-sum");
  CHECK(report[0].path == "betti[2]");
}

TEST_CASE("serre-duality violation on a smooth table") {
  auto [table, op] = projective_space_table(1, 1);
  table.entries[{0, 0}].values[1] = 3;   // true value 2
  table.entries[{1, 1}].values[-1] = 2;  // dual slot should be 3
  const auto report = validate_table(table);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "serre-duality");
}

TEST_CASE("smoothness implications and lcdef range") {
  auto [table, op] = projective_space_table(1, 1);
  table.lcdef_x = 2;  // > n
  auto report = validate_table(table);
  CHECK(report.size() == 2);  // range and smooth-lcdef
  table.lcdef_x = 0;
  table.seminormal = false;
  report = validate_table(table);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "smooth-seminormal");
}

TEST_CASE("coordinate ring must embed into the section ring") {
  auto [table, op] = projective_space_table(1, 1);
  table.coordinate_ring->values[1] = 5;  // h^0(O(1)) = 2
  const auto report = validate_table(table);
  REQUIRE_FALSE(report.empty());
  CHECK(report[0].code == "ring-dominance");
}

TEST_CASE("lefschetz_rank matches the spec examples") {
  const auto [p2, p2op] = projective_space_table(2, 1);
  const auto r = lefschetz_rank(p2, p2op, 0, 0);
  CHECK(r.rank == 1);
  CHECK(r.injective);
  CHECK(r.surjective);

  const auto [pp, ppop] = make_catalog_table(parse_selector("P1xP1@1,1"));
  const auto s = lefschetz_rank(pp, ppop, 1, 1);  // H^{1,1} (dim 2) -> H^{2,2} (dim 1)
  CHECK(s.rank == 1);
  CHECK_FALSE(s.injective);
  CHECK(s.surjective);

  const auto zero_source = lefschetz_rank(p2, p2op, 0, 1);  // H^{0,1} = 0 -> H^{1,2} = 0
  CHECK(zero_source.rank == 0);
  CHECK(zero_source.injective);
  CHECK(zero_source.surjective);

  CHECK_THROWS_AS(lefschetz_rank(p2, p2op, 2, 0), error);  // p = n out of block range
}

TEST_CASE("shape mismatch against the owning table is an error") {
  const auto [p2, p2op] = projective_space_table(2, 1);
  LefschetzOperator bad = p2op;
  bad.matrices[{0, 0}] = RationalMatrix(2, 1);
  CHECK_THROWS_AS(lefschetz_rank(p2, bad, 0, 0), error);
  CHECK_FALSE(validate_operator(p2, bad).empty());
}

TEST_CASE("missing blocks default to zero maps and are flagged") {
  const auto [pp, ppop] = make_catalog_table(parse_selector("P1xP1@1,1"));
  LefschetzOperator sparse;  // nothing stored
  const auto view = resolve_block(pp, sparse, 1, 1);
  CHECK(view.rank == 0);
  CHECK_FALSE(view.stored);
  CHECK(view.defaulted_nontrivially());
  const auto trivial = resolve_block(pp, sparse, 0, 1);  // source dim 0
  CHECK_FALSE(trivial.defaulted_nontrivially());
}

TEST_CASE("hard Lefschetz composite validation on catalogs") {
  for (const char* selector : {"P2", "P3@2", "P1xP2@1,1", "P1xP1@2,1"}) {
    const auto [table, op] = make_catalog_table(parse_selector(selector));
    CHECK(validate_hard_lefschetz(table, op).empty());
  }
  // Dropping a needed block breaks the composite.
  auto [table, op] = make_catalog_table(parse_selector("P2"));
  op.matrices.erase({0, 0});
  CHECK_FALSE(validate_hard_lefschetz(table, op).empty());
}

TEST_CASE("classical descriptors need ring data or the normality flag") {
  auto [table, op] = projective_space_table(1, 2);
  table.coordinate_ring.reset();
  CHECK_THROWS_AS(make_descriptor(table, op, /*classical=*/true), error);
  CHECK_NOTHROW(make_descriptor(table, op, /*classical=*/true, std::nullopt,
                                /*projectively_normal=*/true));
  CHECK_NOTHROW(make_descriptor(table, op, /*classical=*/false));
}
