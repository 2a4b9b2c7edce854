#include "boxdim/geometry.hpp"

#include <algorithm>

namespace boxdim {

namespace {

void require_same_dim(const BoxNd& a, const BoxNd& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("box predicate: dimension mismatch");
}

}  // namespace

bool BoxNd::contains_point(const PointNd& p) const {
  if (static_cast<int>(p.size()) != dim())
    throw std::invalid_argument("contains_point: dimension mismatch");
  for (int j = 0; j < dim(); ++j)
    if (!sides[static_cast<size_t>(j)].contains(p[static_cast<size_t>(j)])) return false;
  return true;
}

bool BoxNd::contains_box(const BoxNd& inner) const {
  require_same_dim(*this, inner);
  for (int j = 0; j < dim(); ++j)
    if (inner[j].lo < (*this)[j].lo || inner[j].hi > (*this)[j].hi) return false;
  return true;
}

PointNd BoxNd::center() const {
  PointNd c;
  c.reserve(sides.size());
  for (const auto& s : sides) c.push_back((s.lo + s.hi) / 2);
  return c;
}

IntervalRelation interval_relation(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) return IntervalRelation::Disjoint;
  if (lo == hi) return IntervalRelation::TouchPoint;
  return IntervalRelation::Overlap;
}

std::optional<Rational> interval_touch_point(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo == hi) return lo;
  return std::nullopt;
}

BoxRelation box_relation(const BoxNd& a, const BoxNd& b) {
  require_same_dim(a, b);
  bool touch = false;
  for (int j = 0; j < a.dim(); ++j) {
    switch (interval_relation(a[j], b[j])) {
      case IntervalRelation::Disjoint:
        return BoxRelation::Disjoint;
      case IntervalRelation::TouchPoint:
        touch = true;
        break;
      case IntervalRelation::Overlap:
        break;
    }
  }
  return touch ? BoxRelation::Touch : BoxRelation::InteriorOverlap;
}

Comparability box_comparable(const BoxNd& a, const BoxNd& b) {
  require_same_dim(a, b);
  bool a_le_b = true, b_le_a = true;
  for (int j = 0; j < a.dim(); ++j) {
    Rational la = a[j].length(), lb = b[j].length();
    if (la > lb) a_le_b = false;
    if (lb > la) b_le_a = false;
  }
  if (a_le_b && b_le_a) return Comparability::Both;
  if (a_le_b) return Comparability::ALeB;
  if (b_le_a) return Comparability::BLeA;
  return Comparability::Incomparable;
}

bool box_sqsubseteq_s(const BoxNd& a, const BoxNd& b, long s) {
  require_same_dim(a, b);
  if (s <= 0) throw std::invalid_argument("box_sqsubseteq_s: s must be positive");
  // Worst anchor sits at a corner of b; the best translate of a through it
  // overlaps b by min(|a[j]|,|b[j]|) per dimension.
  Rational frac(1);
  for (int j = 0; j < a.dim(); ++j) {
    Rational la = a[j].length(), lb = b[j].length();
    frac *= std::min(la, lb) / la;
  }
  return frac * s >= 1;
}

bool box_fully_touching(const BoxNd& a, const BoxNd& b) {
  if (box_relation(a, b) != BoxRelation::Touch)
    throw std::invalid_argument("box_fully_touching: boxes must touch");
  int touch_dims = 0;
  for (int j = 0; j < a.dim(); ++j)
    if (interval_relation(a[j], b[j]) == IntervalRelation::TouchPoint) ++touch_dims;
  return touch_dims == 1;
}

Rational volume(const BoxNd& b) {
  Rational v(1);
  for (const auto& s : b.sides) v *= s.length();
  return v;
}

BoxNd box_affine(const BoxNd& b, const std::vector<Rational>& scale,
                 const std::vector<Rational>& shift) {
  if (static_cast<int>(scale.size()) != b.dim() ||
      static_cast<int>(shift.size()) != b.dim())
    throw std::invalid_argument("box_affine: scale/shift length mismatch");
  std::vector<Interval> sides;
  sides.reserve(b.sides.size());
  for (int j = 0; j < b.dim(); ++j) {
    const Rational& s = scale[static_cast<size_t>(j)];
    if (sgn(s) <= 0) throw std::invalid_argument("box_affine: non-positive scale");
    sides.emplace_back(s * b[j].lo + shift[static_cast<size_t>(j)],
                       s * b[j].hi + shift[static_cast<size_t>(j)]);
  }
  return BoxNd(std::move(sides));
}

BoxNd translate(const BoxNd& b, const std::vector<Rational>& shift) {
  std::vector<Rational> ones(static_cast<size_t>(b.dim()), Rational(1));
  return box_affine(b, ones, shift);
}

BoxNd cartesian_product(const BoxNd& a, const BoxNd& b) {
  std::vector<Interval> sides = a.sides;
  sides.insert(sides.end(), b.sides.begin(), b.sides.end());
  return BoxNd(std::move(sides));
}

std::optional<std::vector<std::pair<Rational, Rational>>> box_intersection(
    const BoxNd& a, const BoxNd& b) {
  require_same_dim(a, b);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(a.sides.size());
  for (int j = 0; j < a.dim(); ++j) {
    Rational lo = std::max(a[j].lo, b[j].lo);
    Rational hi = std::min(a[j].hi, b[j].hi);
    if (lo > hi) return std::nullopt;
    out.emplace_back(lo, hi);
  }
  return out;
}

BoxNd align_min_corners(const BoxNd& a, const BoxNd& b) {
  require_same_dim(a, b);
  std::vector<Rational> shift;
  shift.reserve(a.sides.size());
  for (int j = 0; j < a.dim(); ++j) shift.push_back(b[j].lo - a[j].lo);
  return translate(a, shift);
}

bool ball_intersects_box(const Ball& ball, const BoxNd& box) {
  if (static_cast<int>(ball.center.size()) != box.dim())
    throw std::invalid_argument("ball_intersects_box: dimension mismatch");
  Rational dist2(0);
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& c = ball.center[static_cast<size_t>(j)];
    Rational gap(0);
    if (c < box[j].lo)
      gap = box[j].lo - c;
    else if (c > box[j].hi)
      gap = c - box[j].hi;
    dist2 += gap * gap;
  }
  return dist2 <= ball.radius2;
}

bool ball_inside_box(const Ball& ball, const BoxNd& box) {
  if (static_cast<int>(ball.center.size()) != box.dim())
    throw std::invalid_argument("ball_inside_box: dimension mismatch");
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& c = ball.center[static_cast<size_t>(j)];
    Rational left = c - box[j].lo;
    Rational right = box[j].hi - c;
    if (sgn(left) < 0 || sgn(right) < 0) return false;
    if (left * left < ball.radius2 || right * right < ball.radius2) return false;
  }
  return true;
}

}  // namespace boxdim
