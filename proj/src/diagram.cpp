#include "rp2/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "segment_table.hpp"

namespace rp2 {

namespace detail {

SegmentTable::SegmentTable(const BouquetDiagram& d) {
  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    for (int k = 0; k < static_cast<int>(legs.size()); ++k) {
      const auto& pts = legs[k].points;
      for (int j = 0; j + 1 < static_cast<int>(pts.size()); ++j) {
        FlatSegment s{&pts[j], &pts[j + 1], SegmentRef{i, k, j}, Box::of(Segment{pts[j], pts[j + 1]}),
                      k == 0 && j == 0,
                      k + 1 == static_cast<int>(legs.size()) && j + 2 == static_cast<int>(pts.size())};
        segs_.push_back(s);
      }
    }
  }
  by_xmin_.resize(segs_.size());
  std::iota(by_xmin_.begin(), by_xmin_.end(), std::size_t{0});
  std::sort(by_xmin_.begin(), by_xmin_.end(),
            [&](std::size_t a, std::size_t b) { return segs_[a].box.xmin < segs_[b].box.xmin; });
}

bool structurally_adjacent(const FlatSegment& s, const FlatSegment& t) {
  if (s.ref.loop == t.ref.loop && s.ref.leg == t.ref.leg && std::abs(s.ref.segment - t.ref.segment) == 1) return true;
  const bool s_at_v = s.starts_at_vertex || s.ends_at_vertex;
  const bool t_at_v = t.starts_at_vertex || t.ends_at_vertex;
  return s_at_v && t_at_v;
}

}  // namespace detail

std::string to_string(const SegmentRef& r) {
  return "loop=" + std::to_string(r.loop) + " leg=" + std::to_string(r.leg) + " segment=" + std::to_string(r.segment);
}

Segment segment_at(const BouquetDiagram& d, const SegmentRef& r) {
  const auto& pts = d.loop(r.loop).legs.at(r.leg).points;
  return Segment{pts.at(r.segment), pts.at(r.segment + 1)};
}

RatPoint segment_direction(const BouquetDiagram& d, const SegmentRef& r) {
  const Segment s = segment_at(d, r);
  return s.b - s.a;
}

std::vector<SegmentRef> all_segments(const BouquetDiagram& d) {
  std::vector<SegmentRef> out;
  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    for (int k = 0; k < static_cast<int>(legs.size()); ++k) {
      for (int j = 0; j + 1 < static_cast<int>(legs[k].points.size()); ++j) out.push_back({i, k, j});
    }
  }
  return out;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::EmptyLoop: return "EmptyLoop";
    case ViolationKind::LegTooShort: return "LegTooShort";
    case ViolationKind::ZeroLengthSegment: return "ZeroLengthSegment";
    case ViolationKind::Cusp: return "Cusp";
    case ViolationKind::EndpointNotVertex: return "EndpointNotVertex";
    case ViolationKind::VertexOffDisk: return "VertexOffDisk";
    case ViolationKind::InteriorPointOffDisk: return "InteriorPointOffDisk";
    case ViolationKind::SeamPointOffCircle: return "SeamPointOffCircle";
    case ViolationKind::SeamNotAntipodal: return "SeamNotAntipodal";
    case ViolationKind::SeamIrregular: return "SeamIrregular";
    case ViolationKind::SeamPointCollision: return "SeamPointCollision";
    case ViolationKind::CodirectionalHalfEdges: return "CodirectionalHalfEdges";
    case ViolationKind::NonTransversal: return "NonTransversal";
    case ViolationKind::TriplePoint: return "TriplePoint";
    case ViolationKind::CrossingAtVertex: return "CrossingAtVertex";
  }
  return "Unknown";
}

std::string to_string(const Violation& v) {
  std::string s = std::string(to_string(v.kind)) + " " + to_string(v.where);
  if (!v.detail.empty()) s += " " + v.detail;
  return s;
}

namespace {

struct Analysis {
  std::vector<Violation> violations;
  std::vector<Crossing> crossings;
};

// Per-leg shape rules: length, zero-length segments, cusps, disk membership,
// vertex endpoints, seam transitions.
void check_loops(const BouquetDiagram& d, std::vector<Violation>& out) {
  const RatPoint& v = d.vertex();
  if (!inside_open_disk(v)) out.push_back({ViolationKind::VertexOffDisk, {}, "vertex " + to_string(v)});

  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    if (legs.empty()) {
      out.push_back({ViolationKind::EmptyLoop, {i, 0, 0}, ""});
      continue;
    }
    const int nlegs = static_cast<int>(legs.size());
    bool shape_ok = true;
    for (int k = 0; k < nlegs; ++k) {
      const auto& pts = legs[k].points;
      const int np = static_cast<int>(pts.size());
      if (np < 2) {
        out.push_back({ViolationKind::LegTooShort, {i, k, 0}, std::to_string(np) + " point(s)"});
        shape_ok = false;
        continue;
      }
      for (int j = 0; j + 1 < np; ++j) {
        if (pts[j] == pts[j + 1]) {
          out.push_back({ViolationKind::ZeroLengthSegment, {i, k, j}, to_string(pts[j])});
          shape_ok = false;
        }
      }
      for (int j = 1; j + 1 < np; ++j) {
        if (orient2d(pts[j - 1], pts[j], pts[j + 1]) == 0 && sgn(dot(pts[j] - pts[j - 1], pts[j + 1] - pts[j])) < 0) {
          out.push_back({ViolationKind::Cusp, {i, k, j}, "at " + to_string(pts[j])});
        }
        if (!inside_open_disk(pts[j])) {
          out.push_back({ViolationKind::InteriorPointOffDisk, {i, k, j}, to_string(pts[j])});
        }
      }
      // Leg endpoints: the vertex at the ends of the loop, seam points between.
      if (k == 0 && pts.front() != v) {
        out.push_back({ViolationKind::EndpointNotVertex, {i, 0, 0}, "loop starts at " + to_string(pts.front())});
      }
      if (k + 1 == nlegs && pts.back() != v) {
        out.push_back({ViolationKind::EndpointNotVertex, {i, k, np - 2}, "loop ends at " + to_string(pts.back())});
      }
      if (k > 0 && !on_unit_circle(pts.front())) {
        out.push_back({ViolationKind::SeamPointOffCircle, {i, k, 0}, to_string(pts.front())});
        shape_ok = false;
      }
      if (k + 1 < nlegs && !on_unit_circle(pts.back())) {
        out.push_back({ViolationKind::SeamPointOffCircle, {i, k, np - 2}, to_string(pts.back())});
        shape_ok = false;
      }
    }
    if (!shape_ok) continue;
    for (int k = 0; k + 1 < nlegs; ++k) {
      const auto& a = legs[k].points;
      const auto& b = legs[k + 1].points;
      const RatPoint& p = a.back();
      if (b.front() != -p) {
        out.push_back({ViolationKind::SeamNotAntipodal, {i, k + 1, 0},
                       "exit " + to_string(p) + " entry " + to_string(b.front())});
        continue;
      }
      const RatPoint d_out = p - a[a.size() - 2];
      const RatPoint d_in = b[1] - b[0];
      if (!codirectional(d_in, seam_reflection(p).apply(d_out))) {
        out.push_back({ViolationKind::SeamIrregular, {i, k + 1, 0}, "at " + to_string(p)});
      }
    }
  }
}

void check_seam_points(const BouquetDiagram& d, std::vector<Violation>& out) {
  struct Exit {
    const RatPoint* p;
    SegmentRef ref;
  };
  std::vector<Exit> exits;
  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    for (int k = 0; k + 1 < static_cast<int>(legs.size()); ++k) {
      if (legs[k].points.size() < 2) continue;
      exits.push_back({&legs[k].points.back(), {i, k, static_cast<int>(legs[k].points.size()) - 2}});
    }
  }
  for (std::size_t a = 0; a < exits.size(); ++a) {
    for (std::size_t b = a + 1; b < exits.size(); ++b) {
      const RatPoint& p = *exits[a].p;
      const RatPoint& q = *exits[b].p;
      if (p == q || p == -q) {
        out.push_back({ViolationKind::SeamPointCollision, exits[a].ref,
                       to_string(p) + " collides with " + to_string(exits[b].ref)});
      }
    }
  }
}

void check_half_edges(const BouquetDiagram& d, std::vector<Violation>& out) {
  std::vector<HalfEdgeDirection> dirs;
  for (int i = 0; i < d.n(); ++i) {
    const auto& legs = d.loop(i).legs;
    if (legs.empty() || legs.front().points.size() < 2 || legs.back().points.size() < 2) continue;
    const auto& first = legs.front().points;
    const auto& last = legs.back().points;
    dirs.push_back({{i, false}, first[1] - first[0]});
    dirs.push_back({{i, true}, last[last.size() - 2] - last.back()});
  }
  for (std::size_t a = 0; a < dirs.size(); ++a) {
    for (std::size_t b = a + 1; b < dirs.size(); ++b) {
      if (codirectional(dirs[a].direction, dirs[b].direction)) {
        auto name = [](const HalfEdge& h) { return "e" + std::to_string(h.loop + 1) + (h.incoming ? "^-1" : ""); };
        out.push_back({ViolationKind::CodirectionalHalfEdges, {dirs[a].symbol.loop, 0, 0},
                       name(dirs[a].symbol) + " and " + name(dirs[b].symbol)});
      }
    }
  }
}

LoopParam param_of(const detail::FlatSegment& s, Rat t) { return LoopParam{s.ref.leg, s.ref.segment, std::move(t)}; }

Analysis analyze(const BouquetDiagram& d) {
  Analysis res;
  check_loops(d, res.violations);
  check_seam_points(d, res.violations);
  check_half_edges(d, res.violations);

  const detail::SegmentTable table(d);
  const auto& segs = table.segments();
  table.for_each_candidate_pair([&](std::size_t i, std::size_t j) {
    const auto& s = segs[i];
    const auto& t = segs[j];
    if (detail::structurally_adjacent(s, t)) return;
    auto hit = segment_intersection(s.segment(), t.segment());
    if (std::holds_alternative<intersection::Empty>(hit)) return;
    if (std::holds_alternative<intersection::Degenerate>(hit)) {
      res.violations.push_back({ViolationKind::NonTransversal, s.ref, "with " + to_string(t.ref)});
      return;
    }
    auto& pr = std::get<intersection::Proper>(hit);
    Crossing c;
    c.loop_a = s.ref.loop;
    c.loop_b = t.ref.loop;
    c.param_a = param_of(s, std::move(pr.t1));
    c.param_b = param_of(t, std::move(pr.t2));
    c.location = std::move(pr.point);
    if (c.loop_a > c.loop_b || (c.loop_a == c.loop_b && c.param_b < c.param_a)) {
      std::swap(c.loop_a, c.loop_b);
      std::swap(c.param_a, c.param_b);
    }
    res.crossings.push_back(std::move(c));
  });

  std::vector<std::size_t> idx(res.crossings.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare(res.crossings[a].location, res.crossings[b].location) < 0;
  });
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const Crossing& c = res.crossings[idx[k]];
    if (c.location == res.crossings[idx[k + 1]].location) {
      res.violations.push_back({ViolationKind::TriplePoint, {c.loop_a, c.param_a.leg, c.param_a.segment},
                                "at " + to_string(c.location)});
    }
  }
  for (const Crossing& c : res.crossings) {
    if (c.location == d.vertex()) {
      res.violations.push_back({ViolationKind::CrossingAtVertex, {c.loop_a, c.param_a.leg, c.param_a.segment}, ""});
    }
  }

  // Deterministic output order regardless of the sweep order.
  std::sort(res.crossings.begin(), res.crossings.end(), [](const Crossing& a, const Crossing& b) {
    if (a.loop_a != b.loop_a) return a.loop_a < b.loop_a;
    if (a.loop_b != b.loop_b) return a.loop_b < b.loop_b;
    if (auto c = a.param_a <=> b.param_a; c != 0) return c < 0;
    return (a.param_b <=> b.param_b) < 0;
  });
  std::stable_sort(res.violations.begin(), res.violations.end(), [](const Violation& a, const Violation& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.where < b.where;
  });
  return res;
}

}  // namespace

std::vector<Violation> validate(const BouquetDiagram& d) { return analyze(d).violations; }

bool is_valid(const BouquetDiagram& d) { return validate(d).empty(); }

void require_valid(const BouquetDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw Error(ErrorCode::InvalidDiagram, to_string(v.front()));
}

std::vector<Crossing> crossings(const BouquetDiagram& d) {
  Analysis a = analyze(d);
  if (!a.violations.empty()) throw Error(ErrorCode::InvalidDiagram, to_string(a.violations.front()));
  return std::move(a.crossings);
}

std::vector<Crossing> self_crossings(const BouquetDiagram& d, int loop) {
  std::vector<Crossing> out;
  for (auto& c : crossings(d)) {
    if (c.loop_a == loop && c.loop_b == loop) out.push_back(std::move(c));
  }
  return out;
}

std::vector<HalfEdgeDirection> vertex_directions(const BouquetDiagram& d) {
  require_valid(d);
  std::vector<HalfEdgeDirection> out;
  for (int i = 0; i < d.n(); ++i) {
    const auto& first = d.loop(i).legs.front().points;
    const auto& last = d.loop(i).legs.back().points;
    out.push_back({{i, false}, first[1] - first[0]});
    out.push_back({{i, true}, last[last.size() - 2] - last.back()});
  }
  return out;
}

BouquetDiagram transform(const BouquetDiagram& d, const Mat2& linear, const RatPoint& offset) {
  auto map = [&](const RatPoint& p) { return linear.apply(p) + offset; };
  std::vector<LoopPath> loops = d.loops();
  for (auto& loop : loops) {
    for (auto& leg : loop.legs) {
      for (auto& p : leg.points) p = map(p);
    }
  }
  return BouquetDiagram(map(d.vertex()), std::move(loops));
}

}  // namespace rp2
