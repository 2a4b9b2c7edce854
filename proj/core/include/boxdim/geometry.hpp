#pragma once

#include <optional>
#include <vector>

#include "boxdim/rational.hpp"

namespace boxdim {

// Closed interval of non-zero length.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo >= hi) throw std::invalid_argument("interval: requires lo < hi");
  }

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

using PointNd = std::vector<Rational>;

// Axis-aligned box: product of closed intervals, one per dimension.
struct BoxNd {
  std::vector<Interval> sides;

  explicit BoxNd(std::vector<Interval> s) : sides(std::move(s)) {
    if (sides.empty()) throw std::invalid_argument("box: dimension must be >= 1");
  }

  int dim() const { return static_cast<int>(sides.size()); }
  const Interval& operator[](int j) const { return sides[static_cast<size_t>(j)]; }
  Interval& operator[](int j) { return sides[static_cast<size_t>(j)]; }
  bool operator==(const BoxNd& o) const { return sides == o.sides; }

  bool contains_point(const PointNd& p) const;
  bool contains_box(const BoxNd& inner) const;
  PointNd center() const;
};

enum class IntervalRelation { Disjoint, TouchPoint, Overlap };
enum class BoxRelation { Disjoint, Touch, InteriorOverlap };
enum class Comparability { ALeB, BLeA, Both, Incomparable };

IntervalRelation interval_relation(const Interval& a, const Interval& b);
// Set iff the relation is TouchPoint.
std::optional<Rational> interval_touch_point(const Interval& a, const Interval& b);

BoxRelation box_relation(const BoxNd& a, const BoxNd& b);

// Side-length criterion for "b contains a translate of a" and vice versa.
Comparability box_comparable(const BoxNd& a, const BoxNd& b);
inline bool box_sqsubseteq(const BoxNd& a, const BoxNd& b) {
  auto c = box_comparable(a, b);
  return c == Comparability::ALeB || c == Comparability::Both;
}

// a is s-comparable into b: every anchor x in b admits a translate of a
// through x overlapping b in at least vol(a)/s. For boxes this reduces to
// prod_j min(|a[j]|,|b[j]|) / |a[j]| >= 1/s.
bool box_sqsubseteq_s(const BoxNd& a, const BoxNd& b, long s);

// Pre: box_relation(a, b) == Touch. True iff the contact is (d-1)-dimensional,
// i.e. exactly one dimension touches in a point and all others overlap.
bool box_fully_touching(const BoxNd& a, const BoxNd& b);

Rational volume(const BoxNd& b);
BoxNd box_affine(const BoxNd& b, const std::vector<Rational>& scale,
                 const std::vector<Rational>& shift);
BoxNd translate(const BoxNd& b, const std::vector<Rational>& shift);
BoxNd cartesian_product(const BoxNd& a, const BoxNd& b);

// Intersection as a (possibly degenerate) coordinate range; nullopt when empty.
std::optional<std::vector<std::pair<Rational, Rational>>> box_intersection(
    const BoxNd& a, const BoxNd& b);

// Witness translate of a contained in b; only valid when a is comparable into b.
BoxNd align_min_corners(const BoxNd& a, const BoxNd& b);

// Exact closed ball given by center and squared radius.
struct Ball {
  PointNd center;
  Rational radius2;
};

// dist(center, box)^2 <= radius2, all exact.
bool ball_intersects_box(const Ball& ball, const BoxNd& box);
// ball subset of box, exact.
bool ball_inside_box(const Ball& ball, const BoxNd& box);

}  // namespace boxdim
