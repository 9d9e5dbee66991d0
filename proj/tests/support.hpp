#pragma once

// Fixture diagrams and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's fast paths (segment table, sweep,
// canonicalization) so they can catch mistakes there.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rp2/diagram.hpp"
#include "rp2/invariants.hpp"

namespace fixtures {

inline rp2::Rat q(long n, long d) {
  rp2::Rat r(n, d);
  r.canonicalize();
  return r;
}
inline rp2::RatPoint pt(long xn, long xd, long yn, long yd) { return {q(xn, xd), q(yn, yd)}; }
inline rp2::RatPoint pt(long x, long y) { return rp2::RatPoint(x, y); }

inline rp2::LoopPath one_leg(std::vector<rp2::RatPoint> pts) { return rp2::LoopPath{{rp2::Leg{std::move(pts)}}}; }

// Square [0,1/2]^2 with a corner at the vertex.
inline rp2::LoopPath square_loop() {
  return one_leg({pt(0, 0), pt(1, 2, 0, 1), pt(1, 2, 1, 2), pt(0, 1, 1, 2), pt(0, 0)});
}

inline rp2::BouquetDiagram circle() { return rp2::BouquetDiagram(pt(0, 0), {square_loop()}); }

// Exits at (3/5,4/5), re-enters at (-3/5,-4/5) along the reflected direction.
inline rp2::BouquetDiagram seam_chord() {
  rp2::LoopPath p;
  p.legs.push_back(rp2::Leg{{pt(0, 0), pt(3, 5, 4, 5)}});
  p.legs.push_back(rp2::Leg{{pt(-3, 5, -4, 5), pt(-3, 10, -2, 5), pt(0, 1, -1, 5), pt(0, 0)}});
  return rp2::BouquetDiagram(pt(0, 0), {p});
}

// The chord with one curl on the re-entry leg.
inline rp2::BouquetDiagram chord_with_kink() {
  rp2::LoopPath p;
  p.legs.push_back(rp2::Leg{{pt(0, 0), pt(3, 5, 4, 5)}});
  p.legs.push_back(rp2::Leg{{pt(-3, 5, -4, 5), pt(-3, 10, -2, 5), pt(-21, 80, -3, 8), pt(-13, 80, -1, 5),
                             pt(-19, 80, -1, 4), pt(-3, 80, -9, 40), pt(0, 1, -1, 5), pt(0, 0)}});
  return rp2::BouquetDiagram(pt(0, 0), {p});
}

// One transversal self-crossing at (1/3, 0), positive for orientation +1.
inline rp2::BouquetDiagram figure_eight() {
  return rp2::BouquetDiagram(pt(0, 0), {one_leg({pt(0, 0), pt(1, 2, 0, 1), pt(1, 2, -1, 2), pt(1, 4, 1, 4), pt(0, 0)})});
}

// The square plus a rectangle loop crossing it twice at (3/10,0), (3/10,1/2).
inline rp2::BouquetDiagram two_loops_crossing_twice() {
  return rp2::BouquetDiagram(
      pt(0, 0), {square_loop(), one_leg({pt(0, 0), pt(3, 10, -1, 5), pt(3, 10, 7, 10), pt(-1, 5, 7, 10), pt(0, 0)})});
}

inline rp2::BouquetDiagram mirror_y(const rp2::BouquetDiagram& d) {
  return rp2::transform(d, rp2::Mat2{{rp2::Rat(1), rp2::Rat(0), rp2::Rat(0), rp2::Rat(-1)}});
}

}  // namespace fixtures

namespace oracle {

// Minimum over every rotation of raw and of its reversal, by listing them all.
inline std::vector<rp2::Symbol> canonical(std::vector<rp2::Symbol> raw) {
  std::set<std::vector<rp2::Symbol>> variants;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < raw.size(); ++r) {
      variants.insert(raw);
      std::rotate(raw.begin(), raw.begin() + 1, raw.end());
    }
    std::reverse(raw.begin(), raw.end());
  }
  return *variants.begin();
}

// Number of orbits of all (2n)! words under rotation and reversal.
inline std::size_t word_class_count(int n) {
  std::vector<rp2::Symbol> w(2 * n);
  for (int k = 0; k < 2 * n; ++k) w[k] = k;
  std::set<std::vector<rp2::Symbol>> seen;
  do {
    seen.insert(canonical(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return seen.size();
}

struct FlatSeg {
  int loop, leg, seg;
  rp2::Segment s;
  bool first, last;  // incident to the vertex
};

inline std::vector<FlatSeg> flatten(const rp2::BouquetDiagram& d) {
  std::vector<FlatSeg> out;
  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    for (int k = 0; k < static_cast<int>(legs.size()); ++k) {
      const auto& p = legs[k].points;
      for (int j = 0; j + 1 < static_cast<int>(p.size()); ++j) {
        const bool first = k == 0 && j == 0;
        const bool last = k + 1 == static_cast<int>(legs.size()) && j + 2 == static_cast<int>(p.size());
        out.push_back({i, k, j, {p[j], p[j + 1]}, first, last});
      }
    }
  }
  return out;
}

inline bool adjacent(const FlatSeg& a, const FlatSeg& b) {
  if (a.loop == b.loop && a.leg == b.leg && (a.seg + 1 == b.seg || b.seg + 1 == a.seg)) return true;
  return (a.first || a.last) && (b.first || b.last);
}

struct Counts {
  std::size_t total = 0;
  std::vector<std::size_t> self;  // per loop
  std::size_t mixed = 0;
};

// Every pair of segments tested with segment_intersection, no pruning.
inline Counts crossing_counts(const rp2::BouquetDiagram& d) {
  const auto segs = flatten(d);
  Counts c;
  c.self.assign(d.n(), 0);
  for (std::size_t a = 0; a < segs.size(); ++a) {
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      if (adjacent(segs[a], segs[b])) continue;
      if (!std::holds_alternative<rp2::intersection::Proper>(rp2::segment_intersection(segs[a].s, segs[b].s))) continue;
      ++c.total;
      if (segs[a].loop == segs[b].loop) {
        ++c.self[segs[a].loop];
      } else {
        ++c.mixed;
      }
    }
  }
  return c;
}

}  // namespace oracle
