#include "rp2/moves.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rp2/invariants.hpp"
#include "segment_table.hpp"

namespace rp2 {

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::KinkPair: return "KinkPair";
    case MoveKind::Detour: return "Detour";
    case MoveKind::FingerPush: return "FingerPush";
    case MoveKind::Jiggle: return "Jiggle";
    case MoveKind::Subdivide: return "Subdivide";
  }
  return "Unknown";
}

std::string_view to_string(EditKind k) {
  switch (k) {
    case EditKind::SingleKink: return "SingleKink";
    case EditKind::SeamReroute: return "SeamReroute";
  }
  return "Unknown";
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over the combined input
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

[[noreturn]] void blocked(const std::string& why) { throw Error(ErrorCode::MoveBlocked, why); }

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatPoint lerp(const RatPoint& a, const RatPoint& b, const Rat& f) { return a + f * (b - a); }

void require_params(const std::vector<Rat>& p, std::size_t count, std::string_view kind) {
  if (p.size() != count) {
    blocked(std::string(kind) + " takes " + std::to_string(count) + " parameters, got " + std::to_string(p.size()));
  }
}

void require_fraction(const Rat& f, std::string_view what) {
  if (sgn(f) <= 0 || cmp(f, 1) >= 0) blocked(std::string(what) + " must lie in (0,1), got " + to_string(f));
}

int int_param(const Rat& r, std::string_view what) {
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) blocked(std::string(what) + " must be an integer");
  return static_cast<int>(r.get_num().get_si());
}

int side_param(const Rat& r) {
  if (r == 1) return 1;
  if (r == -1) return -1;
  blocked("side/sign parameter must be 1 or -1, got " + to_string(r));
}

void require_target(const BouquetDiagram& d, const SegmentRef& t) {
  if (t.loop < 0 || t.loop >= d.n()) blocked("no loop " + std::to_string(t.loop));
  const auto& legs = d.loop(t.loop).legs;
  if (t.leg < 0 || t.leg >= static_cast<int>(legs.size())) blocked("no leg " + to_string(t));
  if (t.segment < 0 || t.segment + 1 >= static_cast<int>(legs[t.leg].points.size())) blocked("no segment " + to_string(t));
}

// Crossing bookkeeping compared before and after a move.
struct Census {
  std::size_t total = 0;
  std::vector<int> self_count;
  std::vector<int> index;
};

Census census_of(const BouquetDiagram& d, const std::vector<Crossing>& cs) {
  Census c;
  c.total = cs.size();
  c.self_count.assign(d.n(), 0);
  for (const auto& x : cs) {
    if (x.is_self()) ++c.self_count[x.loop_a];
  }
  c.index = signed_indices(d, cs, Orientation::Positive);
  return c;
}

Census census_of(const BouquetDiagram& d) {
  try {
    return census_of(d, crossings(d));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidDiagram || e.code() == ErrorCode::OppositeEndDirections) blocked(e.what());
    throw;
  }
}

// Replaces the target segment (a,b) by a -> pieces -> b. With more than one
// piece, each piece boundary is a seam crossing: pieces[k] ends at a seam
// point and pieces[k+1] starts at its antipode.
BouquetDiagram splice(const BouquetDiagram& d, const SegmentRef& t, std::vector<std::vector<RatPoint>> pieces) {
  std::vector<LoopPath> loops = d.loops();
  auto& legs = loops[t.loop].legs;
  const std::vector<RatPoint> old = legs[t.leg].points;
  std::vector<Leg> replacement;
  std::vector<RatPoint> current(old.begin(), old.begin() + t.segment + 1);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k > 0) {
      replacement.push_back(Leg{std::move(current)});
      current.clear();
    }
    current.insert(current.end(), pieces[k].begin(), pieces[k].end());
  }
  current.insert(current.end(), old.begin() + t.segment + 1, old.end());
  replacement.push_back(Leg{std::move(current)});
  legs.erase(legs.begin() + t.leg);
  legs.insert(legs.begin() + t.leg, replacement.begin(), replacement.end());
  return BouquetDiagram(d.vertex(), std::move(loops));
}

// Template point (x, y) in the frame of segment s: origin at fraction f,
// x along the segment scaled by h, y along the left normal scaled by h.
RatPoint frame_point(const Segment& s, const Rat& f, const Rat& h, const Rat& x, const Rat& y) {
  const RatPoint u = s.b - s.a;
  const RatPoint v = perp(u);
  return s.a + Rat(f + x * h) * u + Rat(y * h) * v;
}

// One curl: (c-3,0) (c+1,2s) (c-1,2s) (c+3,0). Its two slanted strokes cross
// once at (c, 3s/2).
void append_kink(std::vector<RatPoint>& out, const Segment& s, const Rat& f, const Rat& h, const Rat& centre, int side) {
  const std::array<std::pair<int, int>, 4> pts{{{-3, 0}, {1, 2}, {-1, 2}, {3, 0}}};
  for (auto [x, y] : pts) out.push_back(frame_point(s, f, h, centre + x, Rat(y * side)));
}

// Two curls side by side spanning x in [-13/2, 13/2].
std::vector<RatPoint> kink_pair_points(const Segment& s, const Rat& f, const Rat& h, int side1, int side2) {
  std::vector<RatPoint> out;
  append_kink(out, s, f, h, rat(-7, 2), side1);
  append_kink(out, s, f, h, rat(7, 2), side2);
  return out;
}

void require_template_fits(const Rat& f, const Rat& h, const Rat& half_span) {
  if (sgn(h) <= 0) blocked("template scale must be positive");
  if (sgn(f - half_span * h) <= 0 || cmp(f + half_span * h, 1) >= 0) blocked("template does not fit on the segment");
}

// Nearest point of the 1/4096 grid (ties rounded down).
RatPoint snap(const RatPoint& p) {
  auto round = [](const Rat& v) {
    const Rat scaled = v * 4096 + Rat(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rat r(fl, 4096);
    r.canonicalize();
    return r;
  };
  return {round(p.x), round(p.y)};
}

RatPoint seam_param(const Rat& x, const Rat& y) {
  RatPoint p(x, y);
  if (!on_unit_circle(p)) blocked("seam point " + to_string(p) + " is off the unit circle");
  return p;
}

BouquetDiagram move_subdivide(const BouquetDiagram& d, const MoveSpec& m) {
  require_params(m.params, 1, "Subdivide");
  require_fraction(m.params[0], "fraction");
  const Segment s = segment_at(d, m.target);
  BouquetDiagram out = splice(d, m.target, {{lerp(s.a, s.b, m.params[0])}});
  census_of(out);  // validates
  return out;
}

BouquetDiagram move_jiggle(const BouquetDiagram& d, const MoveSpec& m) {
  require_params(m.params, 2, "Jiggle");
  const auto& pts = d.loop(m.target.loop).legs[m.target.leg].points;
  const int moved = m.target.segment + 1;
  const int np = static_cast<int>(pts.size());
  if (moved < 2 || moved > np - 3) blocked("Jiggle needs interior neighbours on both sides");
  const RatPoint& a = pts[moved - 1];
  const RatPoint& old = pts[moved];
  const RatPoint& c = pts[moved + 1];
  const RatPoint mid = rat(1, 2) * (a + c);
  const RatPoint fresh = old + m.params[0] * (mid - old) + m.params[1] * perp(c - a);
  if (fresh == old) blocked("Jiggle offset is zero");
  if (!inside_open_disk(fresh)) blocked("Jiggle leaves the disk");

  // The moving strokes a-b(s) and b(s)-c sweep the triangles (a, old, fresh)
  // and (old, fresh, c). The crossing pattern stays fixed as long as no other
  // polyline point enters the swept region and b never touches another
  // segment; a and c may only sit in their own triangle.
  const Segment path{old, fresh};
  const Box sweep = [&] {
    Box b1 = Box::of(Segment{a, c});
    Box b2 = Box::of(path);
    return Box{std::min(b1.xmin, b2.xmin), std::min(b1.ymin, b2.ymin), std::max(b1.xmax, b2.xmax),
               std::max(b1.ymax, b2.ymax)};
  }();
  const SegmentRef s1{m.target.loop, m.target.leg, moved - 1};
  const SegmentRef s2{m.target.loop, m.target.leg, moved};
  const detail::SegmentTable table(d);
  table.for_each_overlapping(sweep, [&](std::size_t i) {
    const auto& seg = table.segments()[i];
    if (seg.ref == s1 || seg.ref == s2) return;
    if (segments_touch(seg.segment(), path)) blocked("Jiggle path touches " + to_string(seg.ref));
    for (const RatPoint* e : {seg.a, seg.b}) {
      const bool in1 = in_closed_triangle(*e, a, old, fresh);
      const bool in2 = in_closed_triangle(*e, old, fresh, c);
      if (*e == a) {
        if (in2) blocked("Jiggle folds the corner at the previous point");
      } else if (*e == c) {
        if (in1) blocked("Jiggle folds the corner at the next point");
      } else if (in1 || in2) {
        blocked("Jiggle sweeps over a point of " + to_string(seg.ref));
      }
    }
  });

  std::vector<LoopPath> loops = d.loops();
  loops[m.target.loop].legs[m.target.leg].points[moved] = fresh;
  BouquetDiagram out(d.vertex(), std::move(loops));
  census_of(out);
  return out;
}

BouquetDiagram move_kink_pair(const BouquetDiagram& d, const MoveSpec& m, const Census& before) {
  require_params(m.params, 3, "KinkPair");
  const Rat& f = m.params[0];
  const Rat& h = m.params[1];
  const int side = side_param(m.params[2]);
  require_template_fits(f, h, rat(13, 2));
  const Segment s = segment_at(d, m.target);
  BouquetDiagram out = splice(d, m.target, {kink_pair_points(s, f, h, side, -side)});
  const Census after = census_of(out);
  if (after.total != before.total + 2 || after.self_count[m.target.loop] != before.self_count[m.target.loop] + 2) {
    blocked("KinkPair template meets other strands");
  }
  return out;
}

BouquetDiagram move_finger(const BouquetDiagram& d, const MoveSpec& m, const Census& before) {
  require_params(m.params, 8, "FingerPush");
  const Rat& fa = m.params[0];
  const Rat& fb = m.params[1];
  require_fraction(fa, "fa");
  require_fraction(fb, "fb");
  if (cmp(fa, fb) >= 0) blocked("FingerPush needs fa < fb");
  const SegmentRef strand{int_param(m.params[2], "strand loop"), int_param(m.params[3], "strand leg"),
                          int_param(m.params[4], "strand segment")};
  require_target(d, strand);
  if (strand == m.target) blocked("FingerPush cannot push a segment across itself");
  const Rat& g = m.params[5];
  const Rat& tau = m.params[6];
  const Rat& kappa = m.params[7];
  require_fraction(g, "g");
  if (sgn(tau) <= 0 || sgn(kappa) <= 0) blocked("FingerPush tip sizes must be positive");

  const Segment t = segment_at(d, m.target);
  const Segment across = segment_at(d, strand);
  const RatPoint A = lerp(t.a, t.b, fa);
  const RatPoint B = lerp(t.a, t.b, fb);
  const RatPoint X = lerp(across.a, across.b, g);
  const RatPoint centre = rat(1, 2) * (A + B);
  const RatPoint tip = X + tau * (X - centre);
  const RatPoint P = tip - kappa * (B - A);
  const RatPoint Q = tip + kappa * (B - A);

  auto proper = [](const Segment& x, const Segment& y) {
    return std::holds_alternative<intersection::Proper>(segment_intersection(x, y));
  };
  if (!proper(Segment{A, P}, across) || !proper(Segment{Q, B}, across) || segments_touch(Segment{P, Q}, across)) {
    blocked("FingerPush tip does not straddle the strand");
  }
  BouquetDiagram out = splice(d, m.target, {{A, P, Q, B}});
  const Census after = census_of(out);
  if (after.total != before.total + 2) blocked("FingerPush finger meets other strands");
  return out;
}

BouquetDiagram move_detour(const BouquetDiagram& d, const MoveSpec& m, const Census& before) {
  require_params(m.params, 10, "Detour");
  const int sigma = side_param(m.params[0]);
  const Rat& fa = m.params[1];
  const Rat& fb = m.params[2];
  require_fraction(fa, "fa");
  require_fraction(fb, "fb");
  if (cmp(fa, fb) >= 0) blocked("Detour needs fa < fb");
  const RatPoint q = seam_param(m.params[3], m.params[4]);
  const RatPoint r = seam_param(m.params[5], m.params[6]);
  const Rat& depth = m.params[7];
  const Rat& exit_depth = m.params[8];
  const Rat& h = m.params[9];
  if (sgn(depth) <= 0 || sgn(exit_depth) <= 0) blocked("Detour depths must be positive");
  if (r == -q || r == q) blocked("Detour needs two different seam crossings");
  require_template_fits(rat(1, 2), h, rat(13, 2));

  const Segment t = segment_at(d, m.target);
  const RatPoint A = lerp(t.a, t.b, fa);
  const RatPoint B = lerp(t.a, t.b, fb);
  // A grid corner halfway to the seam keeps the reflected construction below
  // from inheriting the segment's denominators.
  const RatPoint G = snap(rat(1, 2) * (A + q));
  // Out at q, in at -q heading along the reflected direction.
  const RatPoint C = -q + depth * seam_reflection(q).apply(q - G);
  // Short hop parallel to the chord from -q to r.
  const RatPoint D = C + (r + q);
  const RatPoint E = -r + exit_depth * seam_reflection(r).apply(r - D);

  // Both curls sit on the hop, which lies one seam crossing after A. A left
  // curl contributes -1 to the disk-chart crossing sign, and the hop's leg
  // parity flips it once more per seam crossing before it.
  const int hop_leg = m.target.leg + 1;
  const int transport = (hop_leg % 2) ? -1 : 1;
  const int side = -sigma * transport;

  std::vector<RatPoint> hop{-q, C};
  auto curls = kink_pair_points(Segment{C, D}, rat(1, 2), h, side, side);
  hop.insert(hop.end(), curls.begin(), curls.end());
  hop.push_back(D);
  hop.push_back(r);
  BouquetDiagram out = splice(d, m.target, {{A, G, q}, std::move(hop), {-r, E, B}});
  const Census after = census_of(out);
  const int i = m.target.loop;
  if (after.self_count[i] != before.self_count[i] + 2) blocked("Detour route meets its own loop");
  if (after.index[i] - before.index[i] != 2 * sigma) blocked("Detour changed the index by the wrong amount");
  return out;
}

BouquetDiagram edit_single_kink(const BouquetDiagram& d, const EditSpec& e, const Census& before) {
  require_params(e.params, 3, "SingleKink");
  const Rat& f = e.params[0];
  const Rat& h = e.params[1];
  const int side = side_param(e.params[2]);
  require_template_fits(f, h, Rat(3));
  const Segment s = segment_at(d, e.target);
  std::vector<RatPoint> pts;
  append_kink(pts, s, f, h, Rat(0), side);
  BouquetDiagram out = splice(d, e.target, {std::move(pts)});
  const Census after = census_of(out);
  if (after.total != before.total + 1) blocked("SingleKink template meets other strands");
  return out;
}

BouquetDiagram edit_seam_reroute(const BouquetDiagram& d, const EditSpec& e) {
  require_params(e.params, 5, "SeamReroute");
  const Rat& fa = e.params[0];
  const Rat& fb = e.params[1];
  require_fraction(fa, "fa");
  require_fraction(fb, "fb");
  if (cmp(fa, fb) >= 0) blocked("SeamReroute needs fa < fb");
  const RatPoint q = seam_param(e.params[2], e.params[3]);
  const Rat& depth = e.params[4];
  if (sgn(depth) <= 0) blocked("SeamReroute depth must be positive");
  const Segment t = segment_at(d, e.target);
  const RatPoint A = lerp(t.a, t.b, fa);
  const RatPoint B = lerp(t.a, t.b, fb);
  const RatPoint E = -q + depth * seam_reflection(q).apply(q - A);
  BouquetDiagram out = splice(d, e.target, {{A, q}, {-q, E, B}});
  census_of(out);
  return out;
}

BouquetDiagram apply_move_with(const BouquetDiagram& d, const MoveSpec& m, const Census& before) {
  require_target(d, m.target);
  switch (m.kind) {
    case MoveKind::Subdivide: return move_subdivide(d, m);
    case MoveKind::Jiggle: return move_jiggle(d, m);
    case MoveKind::KinkPair: return move_kink_pair(d, m, before);
    case MoveKind::FingerPush: return move_finger(d, m, before);
    case MoveKind::Detour: return move_detour(d, m, before);
  }
  blocked("unknown move kind");
}

BouquetDiagram apply_edit_with(const BouquetDiagram& d, const EditSpec& e, const Census& before, EditReport* report) {
  require_target(d, e.target);
  BouquetDiagram out = e.kind == EditKind::SingleKink ? edit_single_kink(d, e, before) : edit_seam_reroute(d, e);
  if (report) {
    const Census after = census_of(out);
    const int i = e.target.loop;
    report->loop = i;
    report->self_crossings_created = after.self_count[i] - before.self_count[i];
    report->inv3_flipped = (report->self_crossings_created % 2) != 0;
  }
  return out;
}

// Deterministic choice helper over a splitmix64 stream.
class Chooser {
 public:
  explicit Chooser(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix_seed(state_, 0);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
  int sign() { return (next() & 1) ? 1 : -1; }

 private:
  std::uint64_t state_;
};

const std::vector<RatPoint>& seam_candidates() {
  static const std::vector<RatPoint> pts = [] {
    std::vector<RatPoint> v;
    for (int k = -15; k <= 16; ++k) {
      RatPoint p = circle_point(rat(k, 16));
      v.push_back(p);
      v.push_back(-p);
    }
    return v;
  }();
  return pts;
}

// Seam candidates ordered by closeness in angle to `dir` (largest dot first).
std::vector<RatPoint> seam_toward(const RatPoint& dir) {
  std::vector<std::pair<Rat, std::size_t>> keyed;
  const auto& cands = seam_candidates();
  for (std::size_t k = 0; k < cands.size(); ++k) keyed.emplace_back(dot(cands[k], dir), k);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return cmp(x.first, y.first) > 0; });
  std::vector<RatPoint> out;
  for (const auto& [key, k] : keyed) out.push_back(cands[k]);
  return out;
}

const std::vector<std::pair<Rat, Rat>>& sub_intervals() {
  static const std::vector<std::pair<Rat, Rat>> v{
      {rat(1, 3), rat(1, 2)}, {rat(2, 5), rat(3, 5)}, {rat(1, 2), rat(2, 3)}, {rat(1, 4), rat(3, 4)},
      {rat(1, 5), rat(2, 5)}, {rat(3, 5), rat(4, 5)}};
  return v;
}

const std::vector<Rat>& centre_fractions() {
  static const std::vector<Rat> v{rat(1, 2), rat(1, 3), rat(2, 3), rat(2, 5), rat(3, 5), rat(3, 7)};
  return v;
}

std::vector<Rat> seam_pair(const RatPoint& p) { return {p.x, p.y}; }

MoveSpec propose_move(const BouquetDiagram& d, MoveKind kind, Chooser& ch) {
  const auto segs = all_segments(d);
  MoveSpec m;
  m.kind = kind;
  m.target = ch.pick(segs);
  const Segment t = segment_at(d, m.target);
  switch (kind) {
    case MoveKind::Subdivide: {
      static const std::vector<Rat> fs{rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4), rat(2, 5), rat(3, 5)};
      m.params = {ch.pick(fs)};
      break;
    }
    case MoveKind::Jiggle: {
      static const std::vector<Rat> ks{rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 4), rat(1, 2)};
      static const std::vector<Rat> ms{rat(-1, 4), rat(-1, 8), Rat(0), rat(1, 8), rat(1, 4)};
      m.params = {ch.pick(ks), ch.pick(ms)};
      break;
    }
    case MoveKind::KinkPair: {
      static const std::vector<Rat> hs{rat(1, 20), rat(1, 40), rat(1, 80), rat(1, 160)};
      m.params = {ch.pick(centre_fractions()), ch.pick(hs), Rat(ch.sign())};
      break;
    }
    case MoveKind::FingerPush: {
      // Strand: one of the few segments whose midpoints are nearest.
      const RatPoint mid = rat(1, 2) * (t.a + t.b);
      std::vector<std::pair<Rat, SegmentRef>> near;
      for (const auto& r : segs) {
        if (r == m.target) continue;
        const Segment s = segment_at(d, r);
        near.emplace_back(norm2(rat(1, 2) * (s.a + s.b) - mid), r);
      }
      if (near.empty()) blocked("no strand to push across");
      std::stable_sort(near.begin(), near.end(), [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
      const SegmentRef strand = near[ch.below(std::min<std::size_t>(4, near.size()))].second;
      static const std::vector<Rat> gs{rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4)};
      static const std::vector<Rat> taus{rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)};
      static const std::vector<Rat> kappas{rat(1, 8), rat(1, 16), rat(1, 32)};
      const auto& [fa, fb] = ch.pick(sub_intervals());
      m.params = {fa, fb, Rat(strand.loop), Rat(strand.leg), Rat(strand.segment),
                  ch.pick(gs), ch.pick(taus), ch.pick(kappas)};
      break;
    }
    case MoveKind::Detour: {
      const auto& [fa, fb] = ch.pick(sub_intervals());
      const RatPoint A = lerp(t.a, t.b, fa);
      // Prefer exits whose straight path to the seam meets no other strand.
      const detail::SegmentTable table(d);
      std::vector<RatPoint> clear;
      for (const RatPoint& cand : seam_toward(A)) {
        const Segment path{A, cand};
        bool hit = false;
        table.for_each_overlapping(Box::of(path), [&](std::size_t i) {
          const auto& seg = table.segments()[i];
          if (!hit && seg.ref != m.target && segments_touch(seg.segment(), path)) hit = true;
        });
        if (!hit) clear.push_back(cand);
        if (clear.size() == 4) break;
      }
      if (clear.empty()) blocked("no clear path to the seam");
      const RatPoint q = ch.pick(clear);
      const auto rs = seam_toward(-q);
      const RatPoint r = rs[1 + ch.below(5)];
      static const std::vector<Rat> depths{rat(1, 4), rat(1, 8), rat(1, 16)};
      static const std::vector<Rat> hs{rat(1, 14), rat(1, 20), rat(1, 30)};
      m.params = {Rat(ch.sign()), fa, fb};
      for (auto& x : seam_pair(q)) m.params.push_back(x);
      for (auto& x : seam_pair(r)) m.params.push_back(x);
      m.params.push_back(ch.pick(depths));
      m.params.push_back(ch.pick(depths));
      m.params.push_back(ch.pick(hs));
      break;
    }
  }
  return m;
}

MoveKind pick_kind(Chooser& ch) {
  // Weights: Subdivide 1, Jiggle 3, KinkPair 2, FingerPush 3, Detour 2.
  static const std::array<MoveKind, 11> table{MoveKind::Subdivide,  MoveKind::Jiggle,     MoveKind::Jiggle,
                                              MoveKind::Jiggle,     MoveKind::KinkPair,   MoveKind::KinkPair,
                                              MoveKind::FingerPush, MoveKind::FingerPush, MoveKind::FingerPush,
                                              MoveKind::Detour,     MoveKind::Detour};
  return table[ch.below(table.size())];
}

}  // namespace

BouquetDiagram apply_move(const BouquetDiagram& d, const MoveSpec& m) {
  const Census before = census_of(d);
  return apply_move_with(d, m, before);
}

BouquetDiagram apply_edit(const BouquetDiagram& d, const EditSpec& e, EditReport* report) {
  const Census before = census_of(d);
  return apply_edit_with(d, e, before, report);
}

AppliedMove random_applied_move(const BouquetDiagram& d, std::uint64_t seed, std::optional<MoveKind> kind) {
  const Census before = census_of(d);
  for (int attempt = 0; attempt < kMaxMoveAttempts; ++attempt) {
    Chooser ch(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    const MoveKind k = kind ? *kind : pick_kind(ch);
    try {
      MoveSpec m = propose_move(d, k, ch);
      BouquetDiagram out = apply_move_with(d, m, before);
      return AppliedMove{std::move(m), std::move(out)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MoveBlocked) throw;
    }
  }
  throw Error(ErrorCode::Exhausted, "no legal move found in " + std::to_string(kMaxMoveAttempts) + " attempts");
}

MoveSpec random_move(const BouquetDiagram& d, std::uint64_t seed) { return random_applied_move(d, seed).move; }

MoveSpec random_move(const BouquetDiagram& d, std::uint64_t seed, MoveKind kind) {
  return random_applied_move(d, seed, kind).move;
}

EditSpec random_edit(const BouquetDiagram& d, std::uint64_t seed, EditKind kind) {
  const Census before = census_of(d);
  for (int attempt = 0; attempt < kMaxMoveAttempts; ++attempt) {
    Chooser ch(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    const auto segs = all_segments(d);
    EditSpec e;
    e.kind = kind;
    e.target = ch.pick(segs);
    if (kind == EditKind::SingleKink) {
      static const std::vector<Rat> hs{rat(1, 10), rat(1, 20), rat(1, 40), rat(1, 80)};
      e.params = {ch.pick(centre_fractions()), ch.pick(hs), Rat(ch.sign())};
    } else {
      const Segment t = segment_at(d, e.target);
      const auto& [fa, fb] = ch.pick(sub_intervals());
      const auto qs = seam_toward(lerp(t.a, t.b, fa));
      const RatPoint q = qs[ch.below(8)];
      static const std::vector<Rat> depths{rat(1, 4), rat(1, 8), rat(1, 16)};
      e.params = {fa, fb, q.x, q.y, ch.pick(depths)};
    }
    try {
      apply_edit_with(d, e, before, nullptr);
      return e;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::MoveBlocked) throw;
    }
  }
  throw Error(ErrorCode::Exhausted, "no legal edit found in " + std::to_string(kMaxMoveAttempts) + " attempts");
}

namespace {

std::string format_line(std::string_view kind, const SegmentRef& t, const std::vector<Rat>& params) {
  std::string s(kind);
  s += " " + std::to_string(t.loop) + " " + std::to_string(t.leg) + " " + std::to_string(t.segment);
  for (const auto& p : params) s += " " + p.get_num().get_str() + "/" + p.get_den().get_str();
  return s;
}

Rat parse_rat(const std::string& tok) {
  Rat r;
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) {
      r = Rat(mpz_class(tok, 10));
    } else {
      mpz_class num(tok.substr(0, slash), 10);
      mpz_class den(tok.substr(slash + 1), 10);
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + tok + "'");
      r = Rat(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + tok + "'");
  }
  return r;
}

}  // namespace

std::string format_move(const MoveSpec& m) { return format_line(to_string(m.kind), m.target, m.params); }
std::string format_edit(const EditSpec& e) { return format_line(to_string(e.kind), e.target, e.params); }

ScriptLine parse_script_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  SegmentRef t;
  if (!(in >> kind >> t.loop >> t.leg >> t.segment)) {
    throw Error(ErrorCode::ParseError, "expected 'KIND loop leg segment params...': '" + std::string(line) + "'");
  }
  std::vector<Rat> params;
  std::string tok;
  while (in >> tok) params.push_back(parse_rat(tok));

  ScriptLine out;
  for (MoveKind k : {MoveKind::KinkPair, MoveKind::Detour, MoveKind::FingerPush, MoveKind::Jiggle, MoveKind::Subdivide}) {
    if (kind == to_string(k)) out.move = MoveSpec{k, t, params};
  }
  for (EditKind k : {EditKind::SingleKink, EditKind::SeamReroute}) {
    if (kind == to_string(k)) out.edit = EditSpec{k, t, params};
  }
  if (!out.move && !out.edit) throw Error(ErrorCode::ParseError, "unknown move kind '" + kind + "'");
  return out;
}

}  // namespace rp2
