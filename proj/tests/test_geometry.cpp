#include <doctest.h>

#include "rp2/geometry.hpp"
#include "support.hpp"

using namespace rp2;
using fixtures::pt;
using fixtures::q;

TEST_CASE("orient2d signs") {
  CHECK(orient2d(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient2d(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  CHECK(orient2d(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orient2d agrees with the rational determinant") {
  // Mixed denominators exercise the cross-multiplied integer path.
  const std::vector<RatPoint> pts{pt(1, 3, -2, 7), pt(5, 11, 1, 2), pt(-3, 4, 9, 13), pt(2, 9, 2, 9),
                                  pt(7, 3, 1, 6),  pt(0, 1, -5, 8), pt(1, 3, 1, 6),   pt(-1, 2, -1, 2)};
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      for (const auto& c : pts) {
        const Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        CHECK(orient2d(a, b, c) == sgn(det));
      }
    }
  }
}

TEST_CASE("segment_intersection: proper crossing of the axes") {
  const auto r = segment_intersection({pt(0, -1), pt(0, 1)}, {pt(-1, 0), pt(1, 0)});
  REQUIRE(std::holds_alternative<intersection::Proper>(r));
  const auto& p = std::get<intersection::Proper>(r);
  CHECK(p.point == pt(0, 0));
  CHECK(p.t1 == q(1, 2));
  CHECK(p.t2 == q(1, 2));
}

TEST_CASE("segment_intersection: empty and degenerate") {
  CHECK(std::holds_alternative<intersection::Empty>(segment_intersection({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)})));
  CHECK(std::holds_alternative<intersection::Degenerate>(
      segment_intersection({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(2, 1)})));
  // collinear overlap
  CHECK(std::holds_alternative<intersection::Degenerate>(
      segment_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)})));
  // T-junction: an endpoint in the other's interior
  CHECK(std::holds_alternative<intersection::Degenerate>(
      segment_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 1)})));
}

TEST_CASE("segment_intersection is symmetric and its point lies on both segments") {
  const std::vector<Segment> segs{{pt(1, 3, -2, 7), pt(5, 11, 1, 2)}, {pt(-3, 4, 9, 13), pt(7, 3, 1, 6)},
                                  {pt(0, 1, -5, 8), pt(1, 3, 1, 6)},  {pt(-1, 2, -1, 2), pt(2, 9, 2, 9)},
                                  {pt(-1, 1, 1, 3), pt(1, 1, -1, 5)}, {pt(1, 4, -1, 1), pt(1, 5, 1, 1)}};
  int proper = 0;
  for (const auto& a : segs) {
    for (const auto& b : segs) {
      const auto ab = segment_intersection(a, b);
      const auto ba = segment_intersection(b, a);
      CHECK(ab.index() == ba.index());
      if (auto* p = std::get_if<intersection::Proper>(&ab)) {
        ++proper;
        const auto& r = std::get<intersection::Proper>(ba);
        CHECK(p->t1 == r.t2);
        CHECK(p->t2 == r.t1);
        CHECK(p->point == r.point);
        CHECK(p->point == a.a + p->t1 * (a.b - a.a));
        CHECK(p->point == b.a + p->t2 * (b.b - b.a));
        CHECK(sgn(p->t1) > 0);
        CHECK(cmp(p->t1, 1) < 0);
      }
    }
  }
  CHECK(proper > 0);
}

TEST_CASE("seam_reflection on the axes") {
  CHECK(seam_reflection(pt(1, 0)) == Mat2{{Rat(1), Rat(0), Rat(0), Rat(-1)}});
  CHECK(seam_reflection(pt(0, 1)) == Mat2{{Rat(-1), Rat(0), Rat(0), Rat(1)}});
}

TEST_CASE("seam_reflection at (3/5,4/5)") {
  const RatPoint p = pt(3, 5, 4, 5);
  const Mat2 m = seam_reflection(p);
  // Formula evaluated by hand: px^2-py^2 = -7/25, 2 px py = 24/25.
  CHECK(m == Mat2{{q(-7, 25), q(24, 25), q(24, 25), q(7, 25)}});
  CHECK(m.det() == -1);
  CHECK(m.apply(p) == p);
  // ccw tangent at p is perp(p); at -p it is perp(-p) = -perp(p).
  const RatPoint t = perp(p);
  CHECK(m.apply(t) == -t);
  CHECK(m * m == Mat2{{Rat(1), Rat(0), Rat(0), Rat(1)}});
}

TEST_CASE("seam_reflection is an involution with det -1 on many circle points") {
  for (int k = -20; k <= 20; ++k) {
    const RatPoint p = circle_point(q(k, 7));
    REQUIRE(on_unit_circle(p));
    const Mat2 m = seam_reflection(p);
    CHECK(m.det() == -1);
    CHECK(m * m == Mat2{{Rat(1), Rat(0), Rat(0), Rat(1)}});
    CHECK(m.apply(p) == p);
  }
}

TEST_CASE("seam_reflection rejects points off the circle") {
  CHECK_THROWS_AS(seam_reflection(pt(1, 2, 1, 2)), Error);
  CHECK_THROWS_AS(SeamPoint(pt(1, 2, 1, 2)), Error);
  CHECK_NOTHROW(SeamPoint(pt(-3, 5, 4, 5)));
}

TEST_CASE("angle_sort") {
  const std::vector<RatPoint> axes{pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)};
  CHECK(angle_sort(axes) == std::vector<std::size_t>{0, 1, 2, 3});
  const std::vector<RatPoint> two{pt(0, -1), pt(1, 0)};
  CHECK(angle_sort(two) == std::vector<std::size_t>{1, 0});
  const std::vector<RatPoint> codir{pt(2, 0), pt(1, 0)};
  try {
    angle_sort(codir);
    FAIL("expected CodirectionalVectors");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CodirectionalVectors);
  }
}

TEST_CASE("angle_sort matches the order of circle parameters") {
  // circle_point(t) has angle 2 atan t, increasing in t on (-inf, inf).
  std::vector<RatPoint> v;
  const std::vector<Rat> ts{q(-9, 1), q(-2, 1), q(-1, 3), q(0, 1), q(1, 5), q(3, 2), q(40, 1)};
  for (const auto& t : ts) v.push_back(Rat(3) * circle_point(t));
  // Start from (1,0): t = 0 is first, then the positive t, then negative.
  CHECK(angle_sort(v) == std::vector<std::size_t>{3, 4, 5, 6, 0, 1, 2});
}

TEST_CASE("in_closed_triangle") {
  CHECK(in_closed_triangle(pt(1, 4, 1, 4), pt(0, 0), pt(1, 0), pt(0, 1)));
  CHECK(in_closed_triangle(pt(1, 2, 0, 1), pt(0, 0), pt(1, 0), pt(0, 1)));
  CHECK_FALSE(in_closed_triangle(pt(1, 1), pt(0, 0), pt(1, 0), pt(0, 1)));
  // degenerate triangle is a segment
  CHECK(in_closed_triangle(pt(1, 2, 0, 1), pt(0, 0), pt(1, 0), pt(1, 0)));
  CHECK_FALSE(in_closed_triangle(pt(2, 0), pt(0, 0), pt(1, 0), pt(1, 0)));
}
