#include "rp2/random_diagram.hpp"

#include <numeric>
#include <utility>

#include "rp2/normal_form.hpp"

namespace rp2 {

InvariantTuple random_tuple(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::LimitExceeded, "need at least one loop");
  std::vector<Symbol> raw(2 * n);
  std::iota(raw.begin(), raw.end(), 0);
  std::uint64_t state = seed;
  auto next = [&] { return state = mix_seed(state, 7); };
  for (std::size_t k = raw.size(); k > 1; --k) std::swap(raw[k - 1], raw[next() % k]);
  InvariantTuple t{CyclicWord::canonical(std::move(raw)), {}, {}};
  for (int i = 0; i < n; ++i) t.h.push_back(static_cast<int>(next() & 1));
  for (int i = 0; i < n; ++i) t.w.push_back(static_cast<int>(next() & 1));
  return t;
}

RandomDiagram random_diagram(int n, std::uint64_t seed, int scramble_moves) {
  RandomDiagram r{random_tuple(n, seed), {}, BouquetDiagram(RatPoint(0, 0), {})};
  r.diagram = realize(r.start);
  for (int k = 0; k < scramble_moves; ++k) {
    AppliedMove m = random_applied_move(r.diagram, mix_seed(seed, 1000 + k));
    r.scramble.push_back(std::move(m.move));
    r.diagram = std::move(m.result);
  }
  return r;
}

}  // namespace rp2
