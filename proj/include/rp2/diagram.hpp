#pragma once

// Piecewise-linear immersions of a bouquet of n circles into the disk model
// of the projective plane, plus the exact generic-position validator.

#include <compare>
#include <string>
#include <vector>

#include "rp2/geometry.hpp"

namespace rp2 {

// One polyline between two seam crossings (or between the bouquet vertex and a
// seam crossing, or vertex to vertex for a loop that never meets the seam).
struct Leg {
  std::vector<RatPoint> points;
  friend bool operator==(const Leg&, const Leg&) = default;
};

// One loop of the bouquet. Leg k ends at a seam point p and leg k+1 starts at
// -p, so the number of seam crossings is legs.size() - 1.
struct LoopPath {
  std::vector<Leg> legs;
  int seam_crossings() const { return static_cast<int>(legs.size()) - 1; }
  friend bool operator==(const LoopPath&, const LoopPath&) = default;
};

class BouquetDiagram {
 public:
  BouquetDiagram(RatPoint vertex, std::vector<LoopPath> loops) : vertex_(std::move(vertex)), loops_(std::move(loops)) {}

  int n() const { return static_cast<int>(loops_.size()); }
  const RatPoint& vertex() const { return vertex_; }
  const std::vector<LoopPath>& loops() const { return loops_; }
  const LoopPath& loop(int i) const { return loops_.at(i); }

  friend bool operator==(const BouquetDiagram&, const BouquetDiagram&) = default;

 private:
  RatPoint vertex_;
  std::vector<LoopPath> loops_;
};

struct SegmentRef {
  int loop = 0;
  int leg = 0;
  int segment = 0;
  friend auto operator<=>(const SegmentRef&, const SegmentRef&) = default;
};

std::string to_string(const SegmentRef& r);
Segment segment_at(const BouquetDiagram& d, const SegmentRef& r);
RatPoint segment_direction(const BouquetDiagram& d, const SegmentRef& r);
// All segments in loop order: loop, then leg, then segment.
std::vector<SegmentRef> all_segments(const BouquetDiagram& d);

// Position along a loop: (leg, segment, fraction in [0,1)), ordered
// lexicographically. Stands in for the curve parameter t.
struct LoopParam {
  int leg = 0;
  int segment = 0;
  Rat fraction;

  friend bool operator==(const LoopParam& a, const LoopParam& b) {
    return a.leg == b.leg && a.segment == b.segment && a.fraction == b.fraction;
  }
  friend std::strong_ordering operator<=>(const LoopParam& a, const LoopParam& b) {
    if (auto c = a.leg <=> b.leg; c != 0) return c;
    if (auto c = a.segment <=> b.segment; c != 0) return c;
    const int f = cmp(a.fraction, b.fraction);
    return f < 0 ? std::strong_ordering::less : (f > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

struct Crossing {
  int loop_a = 0;
  int loop_b = 0;
  LoopParam param_a;
  LoopParam param_b;
  RatPoint location;

  bool is_self() const { return loop_a == loop_b; }
};

enum class ViolationKind {
  EmptyLoop,
  LegTooShort,
  ZeroLengthSegment,
  Cusp,
  EndpointNotVertex,
  VertexOffDisk,
  InteriorPointOffDisk,
  SeamPointOffCircle,
  SeamNotAntipodal,
  SeamIrregular,
  SeamPointCollision,
  CodirectionalHalfEdges,
  NonTransversal,
  TriplePoint,
  CrossingAtVertex,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  SegmentRef where;
  std::string detail;
};

// "<Kind> loop=<i> leg=<k> segment=<j> <detail>"
std::string to_string(const Violation& v);

// Every violated generic-position rule. Empty means the diagram is valid.
std::vector<Violation> validate(const BouquetDiagram& d);
bool is_valid(const BouquetDiagram& d);

// Throws InvalidDiagram (with the first violation) unless d is valid.
void require_valid(const BouquetDiagram& d);

// All transversal crossings, each reported once. Self-crossings have
// param_a < param_b; mixed crossings have loop_a < loop_b. The vertex itself is
// never a crossing. Throws InvalidDiagram if d is not valid.
std::vector<Crossing> crossings(const BouquetDiagram& d);

// Same as crossings() but restricted to self-crossings of loop i.
std::vector<Crossing> self_crossings(const BouquetDiagram& d, int loop);

// Half-edge symbol: outgoing e_i (incoming = false) or incoming e_i^-1.
struct HalfEdge {
  int loop = 0;
  bool incoming = false;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct HalfEdgeDirection {
  HalfEdge symbol;
  RatPoint direction;
};

// For each loop: (e_i, first-segment direction) then (e_i^-1, negated
// last-segment direction). Requires a valid diagram.
std::vector<HalfEdgeDirection> vertex_directions(const BouquetDiagram& d);

// Whole-diagram transforms used by property tests and the random generator.
BouquetDiagram transform(const BouquetDiagram& d, const Mat2& linear, const RatPoint& offset = RatPoint(0, 0));

}  // namespace rp2
