#pragma once

// Flattened view of a diagram's segments with float bounding boxes. Internal.

#include <vector>

#include "rp2/diagram.hpp"

namespace rp2::detail {

struct FlatSegment {
  const RatPoint* a;
  const RatPoint* b;
  SegmentRef ref;
  Box box;
  bool starts_at_vertex;  // first segment of the loop
  bool ends_at_vertex;    // last segment of the loop

  Segment segment() const { return Segment{*a, *b}; }
};

class SegmentTable {
 public:
  explicit SegmentTable(const BouquetDiagram& d);

  const std::vector<FlatSegment>& segments() const { return segs_; }

  // Calls f(i, j) for every unordered pair whose boxes overlap, i < j.
  template <class F>
  void for_each_candidate_pair(F&& f) const {
    for (std::size_t oi = 0; oi < by_xmin_.size(); ++oi) {
      const std::size_t i = by_xmin_[oi];
      const Box& bi = segs_[i].box;
      for (std::size_t oj = oi + 1; oj < by_xmin_.size(); ++oj) {
        const std::size_t j = by_xmin_[oj];
        const Box& bj = segs_[j].box;
        if (bj.xmin > bi.xmax) break;
        if (!bi.overlaps(bj)) continue;
        if (i < j) f(i, j); else f(j, i);
      }
    }
  }

  // Calls f(i) for every segment whose box overlaps `box`.
  template <class F>
  void for_each_overlapping(const Box& box, F&& f) const {
    for (std::size_t i = 0; i < segs_.size(); ++i) {
      if (segs_[i].box.overlaps(box)) f(i);
    }
  }

 private:
  std::vector<FlatSegment> segs_;
  std::vector<std::size_t> by_xmin_;
};

// Segments that meet structurally: consecutive in one leg, or both incident
// to the bouquet vertex. Their contact is governed by the cusp and
// half-edge rules, not by the crossing rules.
bool structurally_adjacent(const FlatSegment& s, const FlatSegment& t);

}  // namespace rp2::detail
