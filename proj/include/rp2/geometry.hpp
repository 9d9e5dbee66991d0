#pragma once

// Exact rational planar primitives and the disk model of the projective plane.
//
// The projective plane is the closed unit disk with antipodal boundary points
// identified. The boundary circle is called the seam. A curve leaving the disk
// at a seam point p re-enters at -p; the derivative of that gluing, written in
// the single disk chart, is the reflection across the radial line through p.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rp2/error.hpp"

namespace rp2 {

// Arbitrary-precision rational; GMP keeps it in lowest terms with a positive
// denominator after every operation.
using Rat = mpq_class;

int sign(const Rat& r);
std::string to_string(const Rat& r);

struct RatPoint {
  Rat x;
  Rat y;

  RatPoint() = default;
  RatPoint(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  RatPoint(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RatPoint operator-(const RatPoint& a) { return {-a.x, -a.y}; }
  friend RatPoint operator*(const Rat& s, const RatPoint& a) { return {s * a.x, s * a.y}; }
};

// Lexicographic (x, then y); used to sort and deduplicate locations.
std::strong_ordering compare(const RatPoint& a, const RatPoint& b);

Rat dot(const RatPoint& a, const RatPoint& b);
Rat cross(const RatPoint& a, const RatPoint& b);
Rat norm2(const RatPoint& a);
// Counterclockwise perpendicular (-y, x); same length as the input.
RatPoint perp(const RatPoint& a);
std::string to_string(const RatPoint& p);

// Strictly inside the open unit disk.
bool inside_open_disk(const RatPoint& p);
bool on_unit_circle(const RatPoint& p);

// Rational point of the unit circle ((1-t^2)/(1+t^2), 2t/(1+t^2)).
RatPoint circle_point(const Rat& t);

// A point lying exactly on the unit circle. Construction enforces it.
class SeamPoint {
 public:
  explicit SeamPoint(RatPoint p);
  const RatPoint& point() const noexcept { return p_; }
  SeamPoint antipode() const { return SeamPoint(-p_); }

 private:
  RatPoint p_;
};

struct Mat2 {
  std::array<Rat, 4> m;  // row-major
  Rat det() const { return m[0] * m[3] - m[1] * m[2]; }
  RatPoint apply(const RatPoint& v) const { return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};
Mat2 operator*(const Mat2& a, const Mat2& b);

// Sign of det |b-a, c-a|; +1 is counterclockwise.
int orient2d(const RatPoint& a, const RatPoint& b, const RatPoint& c);

struct Segment {
  RatPoint a;
  RatPoint b;
};

namespace intersection {
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
// Transversal crossing of the open segments; t1, t2 are fractions along s1, s2.
struct Proper {
  RatPoint point;
  Rat t1;
  Rat t2;
  friend bool operator==(const Proper&, const Proper&) = default;
};
// Endpoint contact, collinear overlap, or any other non-transversal contact.
struct Degenerate {
  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};
}  // namespace intersection

using SegmentIntersection = std::variant<intersection::Empty, intersection::Proper, intersection::Degenerate>;

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

// Whether the closed segments share at least one point.
bool segments_touch(const Segment& s1, const Segment& s2);

// Whether p lies in the closed convex hull of a, b, c (degenerate hulls allowed).
bool in_closed_triangle(const RatPoint& p, const RatPoint& a, const RatPoint& b, const RatPoint& c);

// Differential of the seam gluing at p, expressed in the disk chart: the
// reflection across the radial line through p. det = -1, M p = p.
Mat2 seam_reflection(const RatPoint& p);

// Indices of `vectors` in counterclockwise order starting from direction (1,0).
// Throws CodirectionalVectors if two inputs are positively proportional.
std::vector<std::size_t> angle_sort(std::span<const RatPoint> vectors);

// Positive multiple test: u = s v for some s > 0.
bool codirectional(const RatPoint& u, const RatPoint& v);

// Cheap floating-point bounding box used only to skip exact tests.
struct Box {
  double xmin, ymin, xmax, ymax;
  static Box of(const Segment& s);
  bool overlaps(const Box& o) const;
};

}  // namespace rp2
