#include "doctest.h"

#include <random>

#include "fintop/reflection.hpp"
#include "support/corpus.hpp"

using namespace fintop;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fintop::Error");
  return ErrorCode::InvariantViolation;
}

FiniteSpace two_sierpinskis() { return disjoint_union(spaces::sierpinski(), spaces::sierpinski()); }

}  // namespace

TEST_SUITE_BEGIN("reflection");

TEST_CASE("r1") {
  SUBCASE("sierpinski") {
    auto r = r1(spaces::sierpinski());
    CHECK(r.related(0, 1));
    CHECK(r.related(1, 0));
  }
  SUBCASE("discrete") {
    auto r = r1(spaces::discrete(2));
    CHECK_FALSE(r.related(0, 1));
    CHECK(r.related(0, 0));
  }
  SUBCASE("pseudocircle") {
    // Frozen from the open-set oracle: off-diagonal pairs ac ad bc bd cd.
    auto r = r1(spaces::pseudocircle());
    CHECK_FALSE(r.related(0, 1));
    CHECK(r.related(0, 2));
    CHECK(r.related(0, 3));
    CHECK(r.related(1, 2));
    CHECK(r.related(1, 3));
    CHECK(r.related(2, 3));
  }
  SUBCASE("matches the neighborhood definition") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
      auto x = testing::random_space(rng, 0, 6);
      auto r = r1(x);
      const auto opens = testing::open_sets(x);
      for (Point a = 0; a < x.size(); ++a)
        for (Point b = 0; b < x.size(); ++b) {
          CHECK(r.related(a, b) == testing::r1_by_definition(opens, a, b));
          CHECK(r.related(a, b) == r.related(b, a));
        }
    }
  }
  SUBCASE("relation matrix invariants are enforced") {
    PointSet row(2);
    row.set(0);
    PointSet other(2);
    other.set(0);
    other.set(1);
    CHECK(code_of([&] { RelationMatrix({row, other}); }) == ErrorCode::InvariantViolation);
  }
}

TEST_CASE("r2") {
  CHECK(r2(spaces::pseudocircle()).block_count() == 1);
  CHECK(r2(spaces::discrete(4)).block_count() == 4);
  auto two = r2(two_sierpinskis());
  CHECK(two.block_count() == 2);
  CHECK(two.blocks() == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  CHECK(r2(FiniteSpace{}).block_count() == 0);
}

TEST_CASE("r3") {
  SUBCASE("sierpinski oracle") { CHECK(r3(spaces::sierpinski(), R3Mode::oracle).block_count() == 1); }
  SUBCASE("discrete fast") { CHECK(r3(spaces::discrete(3)).block_count() == 3); }
  SUBCASE("pseudocircle both modes") {
    auto pc = spaces::pseudocircle();
    CHECK(r3(pc, R3Mode::fast) == r3(pc, R3Mode::oracle));
    CHECK(r3(pc, R3Mode::oracle).block_count() == 1);
  }
  SUBCASE("oracle guard") {
    CHECK(code_of([] { r3(spaces::discrete(7), R3Mode::oracle); }) == ErrorCode::OracleTooLarge);
    CHECK(r3(spaces::discrete(7), R3Mode::fast).block_count() == 7);
  }
  SUBCASE("fast equals oracle on random spaces") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 250; ++trial) {
      auto x = testing::random_space(rng, 0, 6);
      CHECK(r3(x, R3Mode::fast) == r3(x, R3Mode::oracle));
    }
  }
}

TEST_CASE("hausdorff_reflection") {
  SUBCASE("pseudocircle is a point") {
    auto r = hausdorff_reflection(spaces::pseudocircle());
    CHECK(r.space.size() == 1);
    CHECK(r.projection.is_surjective());
  }
  SUBCASE("discrete is unchanged") {
    auto r = hausdorff_reflection(spaces::discrete(3));
    CHECK(r.space.size() == 3);
    CHECK(r.projection.images() == std::vector<Point>{0, 1, 2});
  }
  SUBCASE("sierpinski plus a point") {
    auto r = hausdorff_reflection(disjoint_union(spaces::sierpinski(), spaces::point()));
    CHECK(r.space.is_discrete());
    CHECK(r.space.size() == 2);
  }
  SUBCASE("empty space") {
    auto r = hausdorff_reflection(FiniteSpace{});
    CHECK(r.space.size() == 0);
  }
  SUBCASE("discrete output, surjective, idempotent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      auto x = testing::random_space(rng, 0, 6);
      auto r = hausdorff_reflection(x);
      CHECK(r.space.is_discrete());
      CHECK(r.projection.is_surjective());
      CHECK(r.space.size() == connected_components(x).block_count());
      auto again = hausdorff_reflection(r.space);
      CHECK(again.projection.is_bijective());
      CHECK(is_homeomorphic(again.space, r.space).has_value());
    }
  }
  SUBCASE("T1 finite spaces are discrete and their own reflection") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      auto x = testing::random_space(rng, 0, 6);
      // T1: every singleton closed, i.e. nothing strictly above any point.
      bool t1 = true;
      for (Point p = 0; p < x.size(); ++p) t1 = t1 && x.up_set(p).count() == 1;
      if (!t1) continue;
      CHECK(x.is_discrete());
      CHECK(hausdorff_reflection(x).projection.is_bijective());
    }
  }
}

TEST_CASE("factor_through") {
  SUBCASE("constant map from sierpinski") {
    auto s = spaces::sierpinski();
    auto r = hausdorff_reflection(s);
    auto g = factor_through(PointMap{s, spaces::discrete(2), {1, 1}}, r);
    CHECK(g.images() == std::vector<Point>{1});
  }
  SUBCASE("identity on discrete") {
    auto d = spaces::discrete(2);
    auto g = factor_through(ContinuousMap::identity(d), hausdorff_reflection(d));
    CHECK(g.images() == std::vector<Point>{0, 1});
  }
  SUBCASE("component indicator on two pseudocircles") {
    auto x = disjoint_union(spaces::pseudocircle(), spaces::pseudocircle());
    auto r = hausdorff_reflection(x);
    auto g = factor_through(PointMap{x, spaces::discrete(2), {0, 0, 0, 0, 1, 1, 1, 1}}, r);
    CHECK(g.is_bijective());
    CHECK(g.images() == std::vector<Point>{0, 1});
  }
  SUBCASE("errors") {
    auto s = spaces::sierpinski();
    auto r = hausdorff_reflection(s);
    CHECK(code_of([&] { factor_through(PointMap{s, spaces::discrete(2), {0, 1}}, r); }) ==
          ErrorCode::NotContinuous);
    CHECK(code_of([&] { factor_through(PointMap{s, s, {0, 0}}, r); }) ==
          ErrorCode::NotDiscreteCodomain);
    auto d = spaces::discrete(2);
    CHECK(code_of([&] { factor_through(PointMap{d, d, {0, 1}}, r); }) == ErrorCode::DomainMismatch);
    // A reflection with too coarse classes: f separates a class.
    Reflection bogus{spaces::point(), ContinuousMap(d, spaces::point(), {0, 0}), Partition::whole(2)};
    CHECK(code_of([&] { factor_through(PointMap{d, d, {0, 1}}, bogus); }) ==
          ErrorCode::NotConstantOnClasses);
  }
}

TEST_CASE("verify_universal_property") {
  SUBCASE("sierpinski, three targets") {
    auto rep = verify_universal_property(spaces::sierpinski(), 3);
    // Frozen from exhaustive enumeration: only constant maps are continuous.
    CHECK(rep.maps_enumerated == std::vector<std::uint64_t>{1, 4, 9});
    CHECK(rep.continuous_maps == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(rep.verified_maps == 6);
    CHECK(rep.passed());
  }
  SUBCASE("discrete-2, two targets") {
    auto rep = verify_universal_property(spaces::discrete(2), 2);
    CHECK(rep.continuous_maps == std::vector<std::uint64_t>{1, 4});
    CHECK(rep.passed());
  }
  SUBCASE("pseudocircle, two targets") {
    auto rep = verify_universal_property(spaces::pseudocircle(), 2);
    CHECK(rep.maps_enumerated == std::vector<std::uint64_t>{1, 16});
    CHECK(rep.continuous_maps == std::vector<std::uint64_t>{1, 2});
    CHECK(rep.classes == 1);
    CHECK(rep.passed());
  }
  SUBCASE("guard") {
    CHECK(code_of([] { verify_universal_property(spaces::discrete(13), 3); }) ==
          ErrorCode::SearchSpaceTooLarge);
    CHECK(verify_universal_property(spaces::discrete(12), 3).passed());
  }
  SUBCASE("every space with at most 4 points") {
    for (const auto& x : testing::all_t0_spaces_up_to_iso(4)) CHECK(verify_universal_property(x, 3).passed());
  }
}

TEST_CASE("reflection_commutes_with_product") {
  CHECK(reflection_commutes_with_product(spaces::pseudocircle(), spaces::sierpinski()));
  auto cmp = compare_reflection_of_product(spaces::pseudocircle(), spaces::sierpinski());
  CHECK(cmp.reflection_of_product.size() == 1);
  CHECK(cmp.product_of_reflections.size() == 1);

  auto d = compare_reflection_of_product(spaces::discrete(2), spaces::discrete(3));
  CHECK(d.holds());
  CHECK(d.reflection_of_product.size() == 6);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = testing::random_space(rng, 0, 5);
    auto y = testing::random_space(rng, 0, 5);
    auto c = compare_reflection_of_product(x, y);
    REQUIRE(c.witness);
    CHECK(c.reflection_of_product.size() ==
          connected_components(x).block_count() * connected_components(y).block_count());
    CHECK(testing::is_order_isomorphism(c.reflection_of_product, c.product_of_reflections, *c.witness));
  }
}

TEST_SUITE_END();
