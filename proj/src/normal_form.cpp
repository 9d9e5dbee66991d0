#include "rp2/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "rp2/moves.hpp"

namespace rp2 {

namespace {

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Point number m of `count` equally spaced points on the boundary of the
// square [-1,1]^2, counterclockwise, offset half a step from (1,-1).
RatPoint square_point(int m, int count) {
  Rat s = rat(4 * (2 * m + 1), count);  // perimeter position in (0, 8)
  if (s < 2) return {Rat(1), Rat(s - 1)};
  if (s < 4) return {Rat(3 - s), Rat(1)};
  if (s < 6) return {Rat(-1), Rat(5 - s)};
  return {Rat(s - 7), Rat(-1)};
}

// A seam point close to the direction of w, nudged by delta in the
// half-angle parameter. One Newton step from 1 stands in for |w| >= 1.
RatPoint seam_near(const RatPoint& w, const Rat& delta) {
  const bool flip = sgn(w.x) < 0;
  const RatPoint u = flip ? -w : w;
  const Rat r = (1 + norm2(u)) / 2;
  const RatPoint q = circle_point(u.y / (u.x + r) + delta);
  return flip ? -q : q;
}

struct Layout {
  int attempt = 0;
  Rat radius(int loop, int n) const { return rat((loop + attempt) % n + 1, 2 * (n + 1)); }
  Rat depth() const { return rat(1, 4 + attempt); }
  Rat nudge(int loop) const { return rat(loop + 1 + attempt, 256); }
};

LoopPath route_loop(int loop, int out_pos, int in_pos, bool through_seam, int n, const Layout& layout) {
  const int count = 8 * n;
  const Rat rho = layout.radius(loop, n);
  const RatPoint origin(0, 0);
  const int a = 4 * out_pos;
  const int b = 4 * in_pos;
  LoopPath path;
  if (!through_seam) {
    // Around the fan counterclockwise from spoke a to spoke b, stepping over
    // the other spokes so no corner lands on one.
    Leg leg{{origin, rho * square_point(a, count)}};
    for (int m = (a + 1) % count; m != b; m = (m + 1) % count) {
      if (m % 4 != 0) leg.points.push_back(rho * square_point(m, count));
    }
    leg.points.push_back(rho * square_point(b, count));
    leg.points.push_back(origin);
    path.legs.push_back(std::move(leg));
    return path;
  }
  const RatPoint p1 = rho * square_point(a, count);
  const RatPoint p2 = rho * square_point(b, count);
  const RatPoint q = seam_near(square_point(a, count), layout.nudge(loop));
  const RatPoint entry = -q + layout.depth() * seam_reflection(q).apply(q - p1);
  path.legs.push_back(Leg{{origin, p1, q}});
  path.legs.push_back(Leg{{-q, entry, p2, origin}});
  return path;
}

int self_crossing_parity(const BouquetDiagram& d, int loop) {
  return static_cast<int>(self_crossings(d, loop).size() % 2);
}

// Splices one kink somewhere on the loop; nullopt if every placement tried
// meets another strand.
std::optional<BouquetDiagram> add_kink(const BouquetDiagram& d, int loop) {
  const std::vector<Rat> fractions{rat(1, 2), rat(1, 3), rat(2, 3)};
  const std::vector<Rat> sizes{rat(1, 16), rat(1, 64), rat(1, 256)};
  const auto& legs = d.loop(loop).legs;
  for (const Rat& h : sizes) {
    for (int k = 0; k < static_cast<int>(legs.size()); ++k) {
      for (int j = 0; j + 1 < static_cast<int>(legs[k].points.size()); ++j) {
        for (const Rat& f : fractions) {
          try {
            return apply_edit(d, EditSpec{EditKind::SingleKink, {loop, k, j}, {f, h, Rat(1)}});
          } catch (const Error& e) {
            if (e.code() != ErrorCode::MoveBlocked) throw;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BouquetDiagram> try_realize(const InvariantTuple& t, const Layout& layout) {
  const int n = t.n();
  std::vector<int> out_pos(n), in_pos(n);
  const auto& word = t.order.symbols();
  for (int k = 0; k < 2 * n; ++k) {
    (word[k] % 2 ? in_pos : out_pos)[word[k] / 2] = k;
  }
  std::vector<LoopPath> loops;
  for (int i = 0; i < n; ++i) loops.push_back(route_loop(i, out_pos[i], in_pos[i], t.h[i] == 1, n, layout));
  BouquetDiagram d(RatPoint(0, 0), std::move(loops));
  if (!is_valid(d)) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if (self_crossing_parity(d, i) == t.w[i]) continue;
    auto kinked = add_kink(d, i);
    if (!kinked) return std::nullopt;
    d = std::move(*kinked);
  }
  if (invariants(d) != t) return std::nullopt;
  return d;
}

void check_shape(const InvariantTuple& t) {
  const auto n = static_cast<std::size_t>(t.order.n());
  if (n == 0 || t.h.size() != n || t.w.size() != n) {
    throw Error(ErrorCode::ParseError, "tuple needs one h bit and one w bit per loop");
  }
  for (int b : t.h) {
    if (b != 0 && b != 1) throw Error(ErrorCode::ParseError, "h bits must be 0 or 1");
  }
  for (int b : t.w) {
    if (b != 0 && b != 1) throw Error(ErrorCode::ParseError, "w bits must be 0 or 1");
  }
}

}  // namespace

BouquetDiagram realize(const InvariantTuple& t) {
  check_shape(t);
  for (int attempt = 0; attempt < 16; ++attempt) {
    if (auto d = try_realize(t, Layout{attempt})) return std::move(*d);
  }
  throw Error(ErrorCode::Internal, "could not realize " + to_string(t));
}

std::vector<CyclicWord> enumerate_words(int n) {
  if (n < 1 || n > kMaxEnumerateLoops) {
    throw Error(ErrorCode::LimitExceeded, "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateLoops));
  }
  // Every canonical word starts with e1, so fixing it loses nothing.
  std::vector<Symbol> tail(2 * n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<CyclicWord> words;
  do {
    std::vector<Symbol> raw{0};
    raw.insert(raw.end(), tail.begin(), tail.end());
    CyclicWord w = CyclicWord::canonical(raw);
    if (w.symbols() == raw) words.push_back(std::move(w));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return words;
}

std::vector<InvariantTuple> enumerate_classes(int n) {
  const auto words = enumerate_words(n);
  std::vector<std::vector<int>> bits;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = (mask >> (n - 1 - i)) & 1;
    bits.push_back(std::move(b));
  }
  std::vector<InvariantTuple> out;
  out.reserve(words.size() * bits.size() * bits.size());
  for (const auto& w : words) {
    for (const auto& h : bits) {
      for (const auto& x : bits) out.push_back(InvariantTuple{w, h, x});
    }
  }
  return out;
}

InvariantTuple classify(const BouquetDiagram& d) { return invariants(d); }

}  // namespace rp2
