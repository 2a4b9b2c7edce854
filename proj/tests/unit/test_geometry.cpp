#include "doctest.h"

#include "boxdim/geometry.hpp"
#include "test_util.hpp"

using namespace boxdim;
using testutil::random_box;
using testutil::sqsubseteq_s_oracle;

namespace {

BoxNd box2(long alo, long ahi, long blo, long bhi) {
  return BoxNd({Interval(Rational(alo), Rational(ahi)), Interval(Rational(blo), Rational(bhi))});
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_to_string(parse_rational("5")) == "5");
  CHECK(rational_to_string(make_rational(0, 7)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("largest power of two at most x") {
  CHECK(largest_pow2_at_most(make_rational(5)) == Rational(4));
  CHECK(largest_pow2_at_most(make_rational(1, 3)) == make_rational(1, 4));
  CHECK(largest_pow2_at_most(make_rational(1, 4)) == make_rational(1, 4));
  CHECK(largest_pow2_at_most(make_rational(1023, 1024)) == make_rational(1, 2));
}

TEST_CASE("interval relation") {
  Interval a(Rational(0), Rational(1));
  CHECK(interval_relation(a, Interval(Rational(1), Rational(2))) == IntervalRelation::TouchPoint);
  CHECK(*interval_touch_point(a, Interval(Rational(1), Rational(2))) == Rational(1));
  CHECK(interval_relation(a, Interval(Rational(2), Rational(3))) == IntervalRelation::Disjoint);
  CHECK(interval_relation(Interval(Rational(0), Rational(2)),
                          Interval(Rational(1), Rational(3))) == IntervalRelation::Overlap);
  CHECK_THROWS_AS(Interval(Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("box relation") {
  BoxNd unit = box2(0, 1, 0, 1);
  CHECK(box_relation(unit, box2(1, 2, 1, 2)) == BoxRelation::Touch);  // corner contact
  BoxNd half({Interval(make_rational(1, 2), make_rational(3, 2)), Interval(Rational(0), Rational(1))});
  CHECK(box_relation(unit, half) == BoxRelation::InteriorOverlap);
  CHECK(box_relation(unit, box2(2, 3, 0, 1)) == BoxRelation::Disjoint);
  CHECK_THROWS_AS(box_relation(unit, BoxNd({Interval(Rational(0), Rational(1))})),
                  std::invalid_argument);
}

TEST_CASE("box comparability by side lengths") {
  CHECK(box_comparable(box2(0, 1, 0, 2), box2(0, 1, 0, 3)) == Comparability::ALeB);
  CHECK(box_comparable(box2(0, 2, 0, 1), box2(0, 1, 0, 3)) == Comparability::Incomparable);
  CHECK(box_comparable(box2(0, 1, 0, 1), box2(5, 6, 7, 8)) == Comparability::Both);
}

TEST_CASE("comparability produces an explicit containment witness") {
  DyadicRng rng(42);
  int found = 0;
  for (int it = 0; it < 400; ++it) {
    int d = 1 + static_cast<int>(rng.next_u32() % 4);
    BoxNd a = random_box(rng, d), b = random_box(rng, d);
    Comparability c = box_comparable(a, b);
    if (c == Comparability::ALeB || c == Comparability::Both) {
      ++found;
      CHECK(b.contains_box(align_min_corners(a, b)));
    }
    if (c == Comparability::BLeA || c == Comparability::Both) {
      ++found;
      CHECK(a.contains_box(align_min_corners(b, a)));
    }
  }
  CHECK(found > 20);  // the sample actually exercised the witness path
}

TEST_CASE("s-fit: closed form matches the worked examples") {
  BoxNd a = box2(0, 1, 0, 1), b = box2(0, 2, 0, 2);
  CHECK(box_sqsubseteq_s(a, b, 1));
  // factor 1/2
  CHECK(box_sqsubseteq_s(box2(0, 2, 0, 1), box2(0, 1, 0, 1), 2));
  CHECK_FALSE(box_sqsubseteq_s(box2(0, 2, 0, 1), box2(0, 1, 0, 1), 1));
  // factor 1/4
  CHECK_FALSE(box_sqsubseteq_s(box2(0, 2, 0, 2), box2(0, 1, 0, 1), 2));
  CHECK(box_sqsubseteq_s(box2(0, 2, 0, 2), box2(0, 1, 0, 1), 4));
}

TEST_CASE("s-fit: closed form agrees with the dense-anchor oracle") {
  DyadicRng rng(7);
  for (int it = 0; it < 300; ++it) {
    int d = 1 + static_cast<int>(rng.next_u32() % 3);
    BoxNd a = random_box(rng, d, 4), b = random_box(rng, d, 4);
    long s = 1 + static_cast<long>(rng.next_u32() % 4);
    CHECK(box_sqsubseteq_s(a, b, s) == sqsubseteq_s_oracle(a, b, s));
  }
}

TEST_CASE("s=1 fit coincides with plain comparability") {
  DyadicRng rng(11);
  for (int it = 0; it < 1000; ++it) {
    int d = 1 + static_cast<int>(rng.next_u32() % 4);
    BoxNd a = random_box(rng, d), b = random_box(rng, d);
    Comparability c = box_comparable(a, b);
    bool le = c == Comparability::ALeB || c == Comparability::Both;
    CHECK(box_sqsubseteq_s(a, b, 1) == le);
  }
}

TEST_CASE("fully touching distinguishes facet from corner and edge contacts") {
  CHECK(box_fully_touching(box2(0, 1, 0, 1), box2(1, 2, 0, 1)));
  CHECK_FALSE(box_fully_touching(box2(0, 1, 0, 1), box2(1, 2, 1, 2)));
  BoxNd a({Interval(Rational(0), Rational(1)), Interval(Rational(0), Rational(1)),
           Interval(Rational(0), Rational(1))});
  BoxNd b({Interval(Rational(1), Rational(2)), Interval(Rational(0), Rational(1)),
           Interval(Rational(1), Rational(2))});
  CHECK_FALSE(box_fully_touching(a, b));  // edge contact
  CHECK_THROWS_AS(box_fully_touching(box2(0, 1, 0, 1), box2(5, 6, 0, 1)),
                  std::invalid_argument);
}

TEST_CASE("affine maps, volume, product") {
  BoxNd unit = box2(0, 1, 0, 1);
  BoxNd scaled = box_affine(unit, {Rational(2), Rational(2)}, {Rational(1), Rational(1)});
  CHECK(scaled == box2(1, 3, 1, 3));
  CHECK(volume(BoxNd({Interval(Rational(0), Rational(1)), Interval(Rational(0), Rational(3))})) ==
        Rational(3));
  BoxNd prod = cartesian_product(BoxNd({Interval(Rational(0), Rational(1))}),
                                 BoxNd({Interval(Rational(2), Rational(3))}));
  CHECK(prod == box2(0, 1, 2, 3));
  CHECK_THROWS_AS(box_affine(unit, {Rational(0), Rational(1)}, {Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("predicates are invariant under common scaling and translation") {
  DyadicRng rng(19);
  for (int it = 0; it < 1000; ++it) {
    int d = 1 + static_cast<int>(rng.next_u32() % 4);
    BoxNd a = random_box(rng, d), b = random_box(rng, d);
    Rational scale = make_rational(static_cast<long>(rng.next_u32() % 13) + 1,
                                   static_cast<long>(rng.next_u32() % 9) + 1);
    std::vector<Rational> sc(static_cast<size_t>(d), scale), sh;
    for (int j = 0; j < d; ++j) sh.push_back(testutil::random_rational(rng));
    BoxNd a2 = box_affine(a, sc, sh), b2 = box_affine(b, sc, sh);
    CHECK(box_relation(a, b) == box_relation(a2, b2));
    CHECK(box_comparable(a, b) == box_comparable(a2, b2));
    long s = 1 + static_cast<long>(rng.next_u32() % 3);
    CHECK(box_sqsubseteq_s(a, b, s) == box_sqsubseteq_s(a2, b2, s));
  }
}

TEST_CASE("box relation is symmetric; touch has zero-volume intersection") {
  DyadicRng rng(23);
  for (int it = 0; it < 500; ++it) {
    int d = 1 + static_cast<int>(rng.next_u32() % 3);
    BoxNd a = random_box(rng, d, 3), b = random_box(rng, d, 3);
    CHECK(box_relation(a, b) == box_relation(b, a));
    if (box_relation(a, b) == BoxRelation::Touch) {
      auto common = box_intersection(a, b);
      REQUIRE(common.has_value());
      Rational vol(1);
      for (const auto& [lo, hi] : *common) vol *= hi - lo;
      CHECK(vol == Rational(0));
    }
  }
}

TEST_CASE("exact ball-box tests") {
  Ball ball{{Rational(0), Rational(0)}, Rational(2)};  // radius sqrt(2)
  CHECK(ball_intersects_box(ball, box2(1, 2, 1, 2)));   // corner exactly at distance
  CHECK_FALSE(ball_intersects_box(ball, box2(2, 3, 2, 3)));
  CHECK(ball_inside_box(ball, box2(-2, 2, -2, 2)));
  CHECK_FALSE(ball_inside_box(ball, box2(-1, 1, -2, 2)));  // radius^2=2 > 1
}
