#include "rp2/invariants.hpp"

#include <algorithm>
#include <charconv>

#include "rp2/error.hpp"

namespace rp2 {

std::string symbol_name(Symbol s) { return "e" + std::to_string(s / 2 + 1) + ((s % 2) ? "^-1" : ""); }

std::vector<Symbol> min_rotation_reversal(const std::vector<Symbol>& raw) {
  const std::size_t len = raw.size();
  std::vector<Symbol> best = raw;
  std::vector<Symbol> cand(len);
  std::vector<Symbol> rev(raw.rbegin(), raw.rend());
  for (const std::vector<Symbol>* word : {&raw, static_cast<const std::vector<Symbol>*>(&rev)}) {
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t k = 0; k < len; ++k) cand[k] = (*word)[(r + k) % len];
      if (cand < best) best = cand;
    }
  }
  return best;
}

CyclicWord CyclicWord::canonical(std::vector<Symbol> raw) {
  if (raw.size() % 2 != 0 || raw.empty()) {
    throw Error(ErrorCode::MissingSymbol, "a cyclic word needs 2n symbols, got " + std::to_string(raw.size()));
  }
  const int count = static_cast<int>(raw.size());
  std::vector<int> seen(count, 0);
  for (Symbol s : raw) {
    if (s < 0 || s >= count) throw Error(ErrorCode::MissingSymbol, "symbol " + symbol_name(s) + " out of range");
    if (seen[s]++) throw Error(ErrorCode::DuplicateSymbol, "symbol " + symbol_name(s) + " repeated");
  }
  CyclicWord w;
  w.symbols_ = min_rotation_reversal(raw);
  return w;
}

std::string CyclicWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out += ',';
    out += symbol_name(symbols_[k]);
  }
  return out;
}

std::string to_string(const InvariantTuple& t) {
  std::string out = "order=" + t.order.to_string() + "; h=";
  for (int b : t.h) out += static_cast<char>('0' + b);
  out += "; w=";
  for (int b : t.w) out += static_cast<char>('0' + b);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_tuple(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "tuple '" + std::string(text) + "': " + why);
}

Symbol parse_symbol(std::string_view tok, std::string_view text) {
  tok = trim(tok);
  if (tok.size() < 2 || tok[0] != 'e') bad_tuple(text, "bad symbol '" + std::string(tok) + "'");
  bool inverse = false;
  if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
    inverse = true;
    tok.remove_suffix(3);
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || index < 1) {
    bad_tuple(text, "bad symbol '" + std::string(tok) + "'");
  }
  return 2 * (index - 1) + (inverse ? 1 : 0);
}

std::vector<int> parse_bits(std::string_view s, std::string_view text) {
  std::vector<int> bits;
  for (char c : trim(s)) {
    if (c != '0' && c != '1') bad_tuple(text, "bit strings contain only 0 and 1");
    bits.push_back(c - '0');
  }
  return bits;
}

}  // namespace

InvariantTuple parse_tuple(std::string_view text) {
  std::string_view order_part, h_part, w_part;
  bool have_order = false, have_h = false, have_w = false;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    std::string_view field = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) bad_tuple(text, "expected key=value");
    const std::string_view key = trim(field.substr(0, eq));
    const std::string_view value = field.substr(eq + 1);
    if (key == "order" && !have_order) {
      order_part = value;
      have_order = true;
    } else if (key == "h" && !have_h) {
      h_part = value;
      have_h = true;
    } else if (key == "w" && !have_w) {
      w_part = value;
      have_w = true;
    } else {
      bad_tuple(text, "unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!have_order || !have_h || !have_w) bad_tuple(text, "order, h and w are all required");

  std::vector<Symbol> raw;
  std::string_view o = order_part;
  while (true) {
    const auto comma = o.find(',');
    raw.push_back(parse_symbol(o.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    o.remove_prefix(comma + 1);
  }
  InvariantTuple t{CyclicWord::canonical(std::move(raw)), parse_bits(h_part, text), parse_bits(w_part, text)};
  if (t.h.size() != static_cast<std::size_t>(t.order.n()) || t.w.size() != t.h.size()) {
    bad_tuple(text, "h and w must have one bit per loop");
  }
  return t;
}

namespace {

// Assumes d is valid.
CyclicWord order_at_vertex(const BouquetDiagram& d) {
  std::vector<HalfEdgeDirection> dirs;
  for (int i = 0; i < d.n(); ++i) {
    const auto& first = d.loop(i).legs.front().points;
    const auto& last = d.loop(i).legs.back().points;
    dirs.push_back({{i, false}, first[1] - first[0]});
    dirs.push_back({{i, true}, last[last.size() - 2] - last.back()});
  }
  std::vector<RatPoint> vecs;
  vecs.reserve(dirs.size());
  for (const auto& hd : dirs) vecs.push_back(hd.direction);
  const auto order = angle_sort(vecs);
  std::vector<Symbol> raw;
  raw.reserve(order.size());
  for (std::size_t k : order) raw.push_back(symbol_of(dirs[k].symbol));
  return CyclicWord::canonical(std::move(raw));
}

}  // namespace

CyclicWord inv1(const BouquetDiagram& d) {
  require_valid(d);
  return order_at_vertex(d);
}

std::vector<int> inv2(const BouquetDiagram& d) {
  require_valid(d);
  std::vector<int> bits;
  for (const auto& loop : d.loops()) bits.push_back(loop.seam_crossings() % 2);
  return bits;
}

namespace {

void require_end_directions(const BouquetDiagram& d, int loop) {
  const auto& first = d.loop(loop).legs.front().points;
  const auto& last = d.loop(loop).legs.back().points;
  const RatPoint v0 = first[1] - first[0];
  const RatPoint v1 = last.back() - last[last.size() - 2];
  if (sgn(cross(v0, v1)) == 0 && sgn(dot(v0, v1)) < 0) {
    throw Error(ErrorCode::OppositeEndDirections, "loop " + std::to_string(loop) + " leaves and returns head-on");
  }
}

std::vector<int> indices_from(const BouquetDiagram& d, const std::vector<Crossing>& cs, Orientation orientation) {
  std::vector<int> sums(d.n(), 0);
  for (const Crossing& c : cs) {
    if (!c.is_self()) continue;
    const RatPoint da = segment_direction(d, {c.loop_a, c.param_a.leg, c.param_a.segment});
    const RatPoint db = segment_direction(d, {c.loop_b, c.param_b.leg, c.param_b.segment});
    // Seam crossings before t1 equal the leg index; each one flips the
    // transported orientation.
    const int transport = (c.param_a.leg % 2) ? -1 : 1;
    sums[c.loop_a] += static_cast<int>(orientation) * transport * sgn(cross(da, db));
  }
  return sums;
}

}  // namespace

std::vector<int> signed_indices(const BouquetDiagram& d, Orientation orientation) {
  const auto cs = crossings(d);
  for (int i = 0; i < d.n(); ++i) require_end_directions(d, i);
  return indices_from(d, cs, orientation);
}

std::vector<int> signed_indices(const BouquetDiagram& d, const std::vector<Crossing>& cs, Orientation orientation) {
  for (int i = 0; i < d.n(); ++i) require_end_directions(d, i);
  return indices_from(d, cs, orientation);
}

int signed_index(const BouquetDiagram& d, int loop, Orientation orientation) {
  if (loop < 0 || loop >= d.n()) throw Error(ErrorCode::InvalidDiagram, "no loop " + std::to_string(loop));
  const auto cs = crossings(d);
  require_end_directions(d, loop);
  return indices_from(d, cs, orientation)[loop];
}

std::vector<int> inv3(const BouquetDiagram& d) {
  std::vector<int> bits;
  for (int s : signed_indices(d, Orientation::Positive)) bits.push_back(((s % 2) + 2) % 2);
  return bits;
}

InvariantTuple invariants(const BouquetDiagram& d) {
  const auto cs = crossings(d);  // validates once
  for (int i = 0; i < d.n(); ++i) require_end_directions(d, i);
  InvariantTuple t{order_at_vertex(d), {}, {}};
  for (const auto& loop : d.loops()) t.h.push_back(loop.seam_crossings() % 2);
  for (int s : indices_from(d, cs, Orientation::Positive)) t.w.push_back(((s % 2) + 2) % 2);
  return t;
}

bool equiv(const BouquetDiagram& a, const BouquetDiagram& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::MismatchedLoopCount, std::to_string(a.n()) + " loops vs " + std::to_string(b.n()));
  }
  return invariants(a) == invariants(b);
}

std::vector<std::string> differing_components(const InvariantTuple& a, const InvariantTuple& b) {
  std::vector<std::string> out;
  if (a.order != b.order) out.emplace_back("order");
  if (a.h != b.h) out.emplace_back("h");
  if (a.w != b.w) out.emplace_back("w");
  return out;
}

}  // namespace rp2
