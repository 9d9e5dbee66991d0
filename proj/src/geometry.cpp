#include "rp2/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rp2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CodirectionalVectors: return "CodirectionalVectors";
    case ErrorCode::SeamPointOffCircle: return "SeamPointOffCircle";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::OppositeEndDirections: return "OppositeEndDirections";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::MissingSymbol: return "MissingSymbol";
    case ErrorCode::MismatchedLoopCount: return "MismatchedLoopCount";
    case ErrorCode::MoveBlocked: return "MoveBlocked";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int sign(const Rat& r) { return sgn(r); }

std::string to_string(const Rat& r) { return r.get_str(); }

std::strong_ordering compare(const RatPoint& a, const RatPoint& b) {
  int c = cmp(a.x, b.x);
  if (c == 0) c = cmp(a.y, b.y);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rat dot(const RatPoint& a, const RatPoint& b) { return a.x * b.x + a.y * b.y; }
Rat cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }
Rat norm2(const RatPoint& a) { return dot(a, a); }
RatPoint perp(const RatPoint& a) { return {-a.y, a.x}; }

std::string to_string(const RatPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

bool inside_open_disk(const RatPoint& p) { return norm2(p) < 1; }
bool on_unit_circle(const RatPoint& p) { return norm2(p) == 1; }

RatPoint circle_point(const Rat& t) {
  Rat t2 = t * t;
  Rat den = 1 + t2;
  return {Rat((1 - t2) / den), Rat(2 * t / den)};
}

SeamPoint::SeamPoint(RatPoint p) : p_(std::move(p)) {
  if (!on_unit_circle(p_)) throw Error(ErrorCode::SeamPointOffCircle, to_string(p_) + " is not on the unit circle");
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

namespace {

// u - v as an unreduced fraction num/den with den > 0.
void diff(mpz_class& num, mpz_class& den, const Rat& u, const Rat& v) {
  if (u.get_den() == v.get_den()) {
    num = u.get_num() - v.get_num();
    den = u.get_den();
  } else {
    num = u.get_num() * v.get_den() - v.get_num() * u.get_den();
    den = u.get_den() * v.get_den();
  }
}

}  // namespace

// Sign of (bx-ax)(cy-ay) - (by-ay)(cx-ax) by integer cross-multiplication;
// skipping the gcd reductions of rational arithmetic roughly halves the cost.
int orient2d(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  thread_local mpz_class n1, d1, n2, d2, n3, d3, n4, d4, lhs, rhs;
  diff(n1, d1, b.x, a.x);
  diff(n2, d2, c.y, a.y);
  diff(n3, d3, b.y, a.y);
  diff(n4, d4, c.x, a.x);
  lhs = n1 * n2;
  lhs *= d3;
  lhs *= d4;
  rhs = n3 * n4;
  rhs *= d1;
  rhs *= d2;
  const int r = cmp(lhs, rhs);
  return (r > 0) - (r < 0);
}

namespace {

// p is known to be collinear with segment s; is it on the closed segment?
bool on_collinear_segment(const RatPoint& p, const Segment& s) {
  return cmp(p.x, std::min(s.a.x, s.b.x)) >= 0 && cmp(p.x, std::max(s.a.x, s.b.x)) <= 0 &&
         cmp(p.y, std::min(s.a.y, s.b.y)) >= 0 && cmp(p.y, std::max(s.a.y, s.b.y)) <= 0;
}

}  // namespace

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const int o1 = orient2d(s1.a, s1.b, s2.a);
  const int o2 = orient2d(s1.a, s1.b, s2.b);
  // Both ends strictly on one side of the other segment's line: no contact.
  if (o1 * o2 > 0) return intersection::Empty{};
  const int o3 = orient2d(s2.a, s2.b, s1.a);
  const int o4 = orient2d(s2.a, s2.b, s1.b);
  if (o3 * o4 > 0) return intersection::Empty{};

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const RatPoint d1 = s1.b - s1.a;
    const RatPoint d2 = s2.b - s2.a;
    const RatPoint w = s2.a - s1.a;
    Rat den = cross(d1, d2);
    Rat t1 = cross(w, d2) / den;
    Rat t2 = cross(w, d1) / den;
    RatPoint at = s1.a + t1 * d1;
    return intersection::Proper{std::move(at), std::move(t1), std::move(t2)};
  }
  if ((o1 == 0 && on_collinear_segment(s2.a, s1)) || (o2 == 0 && on_collinear_segment(s2.b, s1)) ||
      (o3 == 0 && on_collinear_segment(s1.a, s2)) || (o4 == 0 && on_collinear_segment(s1.b, s2))) {
    return intersection::Degenerate{};
  }
  return intersection::Empty{};
}

bool segments_touch(const Segment& s1, const Segment& s2) {
  return !std::holds_alternative<intersection::Empty>(segment_intersection(s1, s2));
}

bool in_closed_triangle(const RatPoint& p, const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  const int area = orient2d(a, b, c);
  if (area != 0) {
    const int s1 = orient2d(a, b, p);
    const int s2 = orient2d(b, c, p);
    const int s3 = orient2d(c, a, p);
    return s1 * area >= 0 && s2 * area >= 0 && s3 * area >= 0;
  }
  // Collinear corners: the hull is the longest of the three spans.
  if (orient2d(a, b, p) != 0 || orient2d(b, c, p) != 0 || orient2d(a, c, p) != 0) return false;
  auto within = [&](const RatPoint& u, const RatPoint& v) { return on_collinear_segment(p, Segment{u, v}); };
  return within(a, b) || within(b, c) || within(a, c);
}

Mat2 seam_reflection(const RatPoint& p) {
  if (!on_unit_circle(p)) throw Error(ErrorCode::SeamPointOffCircle, to_string(p) + " is not on the unit circle");
  Rat xx = p.x * p.x;
  Rat yy = p.y * p.y;
  Rat xy2 = 2 * p.x * p.y;
  return {{Rat(xx - yy), xy2, xy2, Rat(yy - xx)}};
}

bool codirectional(const RatPoint& u, const RatPoint& v) { return sgn(cross(u, v)) == 0 && sgn(dot(u, v)) > 0; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const RatPoint& v) {
  const int sy = sgn(v.y);
  if (sy > 0 || (sy == 0 && sgn(v.x) > 0)) return 0;
  return 1;
}

}  // namespace

std::vector<std::size_t> angle_sort(std::span<const RatPoint> vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (codirectional(vectors[i], vectors[j])) {
        throw Error(ErrorCode::CodirectionalVectors,
                    "vectors " + std::to_string(i) + " and " + std::to_string(j) + " are codirectional");
      }
    }
  }
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const int hi = half_plane(vectors[i]);
    const int hj = half_plane(vectors[j]);
    if (hi != hj) return hi < hj;
    return sgn(cross(vectors[i], vectors[j])) > 0;
  });
  return order;
}

Box Box::of(const Segment& s) {
  const double ax = s.a.x.get_d(), ay = s.a.y.get_d();
  const double bx = s.b.x.get_d(), by = s.b.y.get_d();
  // get_d truncates; widen by a relative margin so the filter never rejects a
  // pair that touches exactly.
  auto lo = [](double u, double v) { double m = std::min(u, v); return m - 1e-9 * (1 + std::fabs(m)); };
  auto hi = [](double u, double v) { double m = std::max(u, v); return m + 1e-9 * (1 + std::fabs(m)); };
  return {lo(ax, bx), lo(ay, by), hi(ax, bx), hi(ay, by)};
}

bool Box::overlaps(const Box& o) const {
  return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
}

}  // namespace rp2
