#include "doctest.h"

#include "fintop/doubled.hpp"

using namespace fintop;
using namespace fintop::doubled;

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

std::vector<std::size_t> betti(const SimplicialComplex& k) {
  return homology(k, Coefficients::integers()).betti_numbers();
}

}  // namespace

TEST_SUITE_BEGIN("doubled");

TEST_CASE("punctured circle") {
  auto x = punctured_circle();
  auto r = r_classes(x);
  REQUIRE(r.labels.size() == 7);
  CHECK(r.labels[6] == "0'");
  CHECK(r.r1.related(0, 6));
  CHECK_FALSE(r.r1.related(0, 1));
  CHECK_FALSE(r.r1.related(1, 6));
  CHECK(r.nontrivial_classes() == std::vector<std::vector<Point>>{{0, 6}});
  CHECK(r.r2 == r.r3);
  CHECK(r.r3.block_count() == 6);

  // Both copies of the twin connect its neighbours: a theta graph.
  CHECK(betti(doubled_complex(x)) == std::vector<std::size_t>{1, 2});
  auto h = reflection(x);
  CHECK(h.all_simplices() == polygon(6).all_simplices());
  CHECK(betti(h) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("line with two origins") {
  auto x = two_origin_line();
  auto r = r_classes(x);
  CHECK(r.nontrivial_classes() == std::vector<std::vector<Point>>{{1, 3}});
  CHECK(betti(doubled_complex(x)) == std::vector<std::size_t>{1, 1});
  CHECK(betti(reflection(x)) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("several twins") {
  DoubledSpace x{polygon(5), {1, 3}, "two twins"};
  auto r = r_classes(x);
  CHECK(r.nontrivial_classes() == std::vector<std::vector<Point>>{{1, 5}, {3, 6}});
  CHECK(betti(doubled_complex(x)) == std::vector<std::size_t>{1, 3});
  CHECK(betti(reflection(x)) == std::vector<std::size_t>{1, 1});

  // A doubled edge: both endpoints twinned, so the filled copies include {v', w'}.
  DoubledSpace e{path(2), {0, 1}, "edge"};
  CHECK(doubled_complex(e).count(1) == 4);
  CHECK(betti(reflection(e)) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("reflection of a twin on a filled triangle") {
  DoubledSpace x{SimplicialComplex::from_facets(3, {{0, 1, 2}}), {2}, "cone"};
  // Two triangles sharing the edge 01: still a disk.
  CHECK(betti(doubled_complex(x)) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(reflection(x)) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("no twins: diagonal only") {
  DoubledSpace x{polygon(4), {}, "plain"};
  auto r = r_classes(x);
  CHECK(r.nontrivial_classes().empty());
  for (Point a = 0; a < 4; ++a)
    for (Point b = 0; b < 4; ++b) CHECK(r.r1.related(a, b) == (a == b));
  CHECK(reflection(x) == polygon(4));
}

TEST_CASE("reflection is the base for every choice of twins") {
  for (const auto& base : {polygon(5), path(4), SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}})}) {
    const std::uint32_t v = static_cast<std::uint32_t>(base.vertex_count());
    for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
      DoubledSpace x{base, {}, "subset"};
      for (std::uint32_t i = 0; i < v; ++i)
        if (mask >> i & 1) x.twins.push_back(i);
      auto r = r_classes(x);
      CHECK(r.nontrivial_classes().size() == x.twins.size());
      for (const auto& c : r.nontrivial_classes()) CHECK(c.size() == 2);
      CHECK(reflection(x) == base);
    }
  }
}

TEST_CASE("errors") {
  DoubledSpace isolated{SimplicialComplex::from_facets(3, {{0, 1}}), {2}, "isolated"};
  CHECK(code_of([&] { r_classes(isolated); }) == ErrorCode::IsolatedTwin);
  CHECK(code_of([&] { doubled_complex(isolated); }) == ErrorCode::IsolatedTwin);
  DoubledSpace outside{path(3), {7}, "outside"};
  CHECK(code_of([&] { r_classes(outside); }) == ErrorCode::IndexOutOfRange);
  DoubledSpace twice{path(3), {1, 1}, "twice"};
  CHECK(code_of([&] { r_classes(twice); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("named examples") {
  CHECK(named_example("punctured-circle")->name == "punctured-circle");
  CHECK(named_example("two-origin-line")->twins == std::vector<std::uint32_t>{1});
  CHECK_FALSE(named_example("klein-bottle"));
}

TEST_SUITE_END();
