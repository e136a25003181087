#include <doctest.h>

#include "helpers.hpp"
#include "zeroloc/regions.hpp"

using namespace zeroloc;

TEST_CASE("sqrt_map_disc named configurations") {
  const CassiniRegion fig = sqrt_map_disc({cx(6.0, 6.0), 3.0});
  CHECK(fig.focus == std::sqrt(cx(6.0, 6.0)));
  CHECK(fig.radius == 3.0);
  CHECK(two_loop_predicate(fig));  // |6+6i| ~ 8.49 > 3

  const CassiniRegion origin = sqrt_map_disc({cx(0.0), 4.0});
  CHECK_FALSE(two_loop_predicate(origin));
  CHECK(contains(origin, cx(2.0)));          // |z| = 2 on the boundary
  CHECK(contains(origin, cx(0.0, 1.9)));
  CHECK_FALSE(contains(origin, cx(2.1)));

  const CassiniRegion points = sqrt_map_disc({cx(4.0), 0.0});
  CHECK(contains(points, cx(2.0)));
  CHECK(contains(points, cx(-2.0)));
  CHECK_FALSE(contains(points, cx(2.0000001)));
  CHECK(two_loop_predicate(points));  // the two points are separate components

  CHECK_FALSE(two_loop_predicate(sqrt_map_disc({cx(1.0), 2.0})));  // origin inside
}

TEST_CASE("contains is closed-set membership") {
  CHECK(contains(Disc{cx(0.0), 1.0}, cx(1.0)));
  CHECK_FALSE(contains(Disc{cx(0.0), 1.0}, cx(1.0 + 1e-12)));
  CHECK(contains(AnnulusGap{1.0, 2.0}, cx(0.5)));
  CHECK(contains(AnnulusGap{1.0, 2.0}, cx(2.5)));
  CHECK(contains(AnnulusGap{1.0, 2.0}, cx(1.0)));
  CHECK_FALSE(contains(AnnulusGap{1.0, 2.0}, cx(1.5)));  // inside the forbidden ring
}

TEST_CASE("square root region membership mirrors the squared plane") {
  SplitMix64 g(31415);
  for (int trial = 0; trial < 10000; ++trial) {
    const Disc d{zltest::random_cx(g, 5.0), 5.0 * g.next_unit()};
    const cx z = zltest::random_cx(g, 3.0);
    CHECK(contains(sqrt_map_disc(d), z) == contains(d, z * z));
  }
}

TEST_CASE("positive real center keeps membership symmetric under negation") {
  SplitMix64 g(2718);
  for (int trial = 0; trial < 10000; ++trial) {
    const double c = 0.5 + 5.0 * g.next_unit();
    const CassiniRegion region = sqrt_map_disc({cx(c), c * g.next_unit() * 0.99});
    const cx z = zltest::random_cx(g, 3.0);
    CHECK(contains(region, z) == contains(region, -z));
  }
}
