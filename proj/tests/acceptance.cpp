// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rp2/diagram_io.hpp"
#include "rp2/fuzz.hpp"
#include "rp2/normal_form.hpp"
#include "rp2/random_diagram.hpp"
#include "support.hpp"

using namespace rp2;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string enumeration_text(int n) {
  std::string s;
  for (const auto& t : enumerate_classes(n)) s += to_string(t) + "\n";
  return s;
}

Outcome fuzz_campaign() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const FuzzReport r = run_fuzz({42, 20, 1000});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d trials invariant, %ld moves, %.1f s", r.trials_passed, r.trials_run,
                r.moves_applied, secs);
  o.detail = buf;
  if (r.failure || r.trials_passed != 1000) fail(o, std::string(buf) + "; first violation in trial " +
                                                        std::to_string(r.failure ? r.failure->trial : -1));
  if (secs >= 120.0) fail(o, std::string(buf) + "; over the 120 s budget");
  return o;
}

Outcome detour_arithmetic() {
  Outcome o;
  int done = 0, plus = 0;
  for (std::uint64_t seed = 1; done < 100 && seed < 5000; ++seed) {
    const auto r = random_diagram(1 + static_cast<int>(seed % 3), mix_seed(seed, 2), 2);
    AppliedMove m{MoveSpec{}, r.diagram};
    try {
      m = random_applied_move(r.diagram, mix_seed(seed, 3), MoveKind::Detour);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Exhausted) continue;
      throw;
    }
    const int loop = m.move.target.loop;
    const int sigma = sgn(m.move.params[0]);
    const int delta = signed_index(m.result, loop) - signed_index(r.diagram, loop);
    if (delta != 2 * sigma) fail(o, "seed " + std::to_string(seed) + ": index moved by " + std::to_string(delta));
    if (invariants(m.result) != r.start) fail(o, "seed " + std::to_string(seed) + ": tuple changed");
    ++done;
    plus += sigma > 0;
  }
  if (done < 100) fail(o, "only " + std::to_string(done) + " legal detours found");
  if (o.pass) o.detail = std::to_string(done) + " detours, " + std::to_string(plus) + " with +2";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  int kinks = 0, reroutes = 0, reported = 0;
  for (std::uint64_t seed = 1; (kinks < 200 || reroutes < 200) && seed < 5000; ++seed) {
    const auto r = random_diagram(1 + static_cast<int>(seed % 3), mix_seed(seed, 4), 2);
    const InvariantTuple before = r.start;
    for (EditKind kind : {EditKind::SingleKink, EditKind::SeamReroute}) {
      int& count = kind == EditKind::SingleKink ? kinks : reroutes;
      if (count >= 200) continue;
      EditSpec e;
      try {
        e = random_edit(r.diagram, mix_seed(seed, 5), kind);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::Exhausted) continue;
        throw;
      }
      EditReport rep;
      const InvariantTuple after = invariants(apply_edit(r.diagram, e, &rep));
      const int i = e.target.loop;
      InvariantTuple want = before;
      if (kind == EditKind::SingleKink) {
        want.w[i] ^= 1;
      } else {
        want.h[i] ^= 1;
        if (rep.inv3_flipped) {
          want.w[i] ^= 1;
          ++reported;
        }
      }
      if (after != want || rep.loop != i) {
        fail(o, std::string(to_string(kind)) + " seed " + std::to_string(seed) + ": " + to_string(before) + " -> " +
                    to_string(after));
      }
      ++count;
    }
  }
  if (kinks < 200 || reroutes < 200) fail(o, "not enough legal edits");
  if (o.pass) {
    o.detail = std::to_string(kinks) + " SingleKink, " + std::to_string(reroutes) + " SeamReroute (" +
               std::to_string(reported) + " reported a w change)";
  }
  return o;
}

Outcome completeness() {
  Outcome o;
  const std::size_t want[] = {0, 4, 48, 3840};
  for (int n = 1; n <= 3; ++n) {
    const std::size_t got = enumerate_classes(n).size();
    const std::size_t oracle_count = oracle::word_class_count(n) << (2 * n);
    if (got != want[n] || got != oracle_count) {
      fail(o, "n=" + std::to_string(n) + ": " + std::to_string(got) + " classes, oracle " + std::to_string(oracle_count));
    }
  }
  int round_trips = 0;
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : enumerate_classes(n)) {
      if (classify(realize(t)) != t) fail(o, "round trip failed for " + to_string(t));
      ++round_trips;
    }
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const InvariantTuple t = random_tuple(3, seed);
    if (classify(realize(t)) != t) fail(o, "round trip failed for " + to_string(t));
    ++round_trips;
  }
  if (o.pass) o.detail = "4/48/3840 classes, " + std::to_string(round_trips) + " round trips";
  return o;
}

Outcome orientation_independence() {
  Outcome o;
  long loops = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto r = random_diagram(1 + static_cast<int>(seed % 3), mix_seed(seed, 6), 4);
    const auto cs = crossings(r.diagram);
    const auto pos = signed_indices(r.diagram, cs, Orientation::Positive);
    const auto neg = signed_indices(r.diagram, cs, Orientation::Negative);
    const auto w = inv3(r.diagram);
    const auto raw = oracle::crossing_counts(r.diagram);
    for (int i = 0; i < r.diagram.n(); ++i) {
      const int bit_pos = ((pos[i] % 2) + 2) % 2;
      const int bit_neg = ((neg[i] % 2) + 2) % 2;
      if (pos[i] != -neg[i] || bit_pos != bit_neg || bit_pos != w[i] || w[i] != static_cast<int>(raw.self[i] % 2)) {
        fail(o, "seed " + std::to_string(seed) + " loop " + std::to_string(i));
      }
      ++loops;
    }
  }
  if (o.pass) o.detail = "500 diagrams, " + std::to_string(loops) + " loops";
  return o;
}

Outcome decision_consistency() {
  Outcome o;
  int equal_pairs = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const InvariantTuple t1 = random_tuple(n, mix_seed(seed, 7));
    const InvariantTuple t2 = seed % 4 == 0 ? t1 : random_tuple(n, mix_seed(seed, 8));
    equal_pairs += t1 == t2;
    if (equiv(realize(t1), realize(t2)) != (t1 == t2)) fail(o, to_string(t1) + " vs " + to_string(t2));
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto r = random_diagram(1 + static_cast<int>(seed % 3), mix_seed(seed, 9), 0);
    BouquetDiagram d = r.diagram;
    for (int k = 0; k < 10; ++k) d = random_applied_move(d, mix_seed(seed, 100 + k)).result;
    if (!equiv(r.diagram, d)) fail(o, "moves changed the class, seed " + std::to_string(seed));
  }
  if (o.pass) o.detail = "100 tuple pairs (" + std::to_string(equal_pairs) + " equal), 100 move pairs";
  return o;
}

std::string cli_output(const std::string& args) {
  const std::string capture = "rp2_acceptance_cli.txt";
  std::system((std::string("\"") + RP2CTL_PATH + "\" " + args + " > " + capture + " 2>/dev/null").c_str());
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(capture.c_str());
  return ss.str();
}

Outcome exactness_regression() {
  Outcome o;
  // Recorded from a reference build; any change in formatting or in a normal form shows up here.
  const std::string enum1 =
      "order=e1,e1^-1; h=0; w=0\norder=e1,e1^-1; h=0; w=1\norder=e1,e1^-1; h=1; w=0\norder=e1,e1^-1; h=1; w=1\n";
  const std::string circle_json =
      "{\n  \"n\": 1,\n  \"vertex\": [0,1,0,1],\n  \"loops\": [\n    {\"legs\": [\n"
      "      [[0,1,0,1], [1,4,-1,8], [1,4,1,8], [1,8,1,4], [-1,8,1,4], [-1,4,1,8], [0,1,0,1]]\n    ]}\n  ]\n}\n";
  const std::uint64_t enum3_hash = 12690353696510653315ull;
  const std::uint64_t realize3_hash = 11257900785672406782ull;

  std::vector<std::function<std::string()>> producers{
      [] { return enumeration_text(1); },
      [] { return enumeration_text(3); },
      [] { return to_json(realize(parse_tuple("order=e1,e1^-1; h=0; w=0"))); },
      [] {
        std::string s;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) s += to_json(realize(random_tuple(3, seed)));
        return s;
      },
      [] { return to_json(diagram_from_json(to_json(fixtures::chord_with_kink()))); },
      [] { return to_string(invariants(fixtures::chord_with_kink())) + "\n"; },
      [] { return cli_output("enumerate 2"); },
      [] { return cli_output("realize \"order=e1,e2,e1^-1,e2^-1; h=10; w=01\""); },
      [] { return cli_output("fuzz --seed 42 --steps 5 --trials 5"); },
  };
  std::vector<std::string> first;
  for (auto& p : producers) first.push_back(p());
  for (std::size_t k = 0; k < producers.size(); ++k) {
    if (producers[k]() != first[k]) fail(o, "output " + std::to_string(k) + " differs between runs");
  }
  if (first[0] != enum1) fail(o, "enumerate 1 text changed");
  if (first[2] != circle_json) fail(o, "normal-form circle JSON changed");
  if (fnv1a(first[1]) != enum3_hash) fail(o, "enumerate 3 text changed");
  if (fnv1a(first[3]) != realize3_hash) fail(o, "three-loop normal forms changed");
  if (first[4] != to_json(fixtures::chord_with_kink())) fail(o, "JSON round trip is not byte-identical");
  if (first[5] != "order=e1,e1^-1; h=1; w=1\n") fail(o, "tuple text changed");
  if (first[6] != enumeration_text(2)) fail(o, "CLI enumeration differs from the library");
  if (o.pass) o.detail = std::to_string(producers.size()) + " golden outputs stable";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 fuzz: 1000 trials x 20 moves keep the invariants", fuzz_campaign},
      {"2 detour: index moves by 2*sigma, tuple unchanged", detour_arithmetic},
      {"3 negative controls: edits flip exactly their bit", negative_controls},
      {"4 completeness: counts and realize round trips", completeness},
      {"5 orientation independence of the index parity", orientation_independence},
      {"6 equiv agrees with tuple equality and with moves", decision_consistency},
      {"7 golden outputs are byte-identical", exactness_regression},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
