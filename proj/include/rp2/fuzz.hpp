#pragma once

// Fuzz campaigns: random diagrams pushed through random regular moves, with
// the invariant tuple checked after every move. Any change is reported with a
// replayable move script.
//
// Script format:
//   # start order=e1,e1^-1; h=1; w=0
//   KinkPair 0 0 1 1/2 1/40 1/1
//   ...
// The start line names the tuple whose normal form (realize) is the initial
// diagram; every following line is a move or edit applied in order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rp2/invariants.hpp"
#include "rp2/moves.hpp"

namespace rp2 {

struct FuzzOptions {
  std::uint64_t seed = 42;
  int steps = 20;
  int trials = 100;
};

struct FuzzFailure {
  int trial = 0;          // -1 for a replayed script
  int step = 0;           // 1-based script line (after the start line)
  InvariantTuple expected;
  InvariantTuple actual;
  std::string script;     // reproduces the failure
};

struct FuzzReport {
  int trials_run = 0;
  int trials_passed = 0;
  long moves_applied = 0;
  std::optional<FuzzFailure> failure;  // first failing trial; the campaign stops there
};

// Loop count of trial k is 1 + (mixed seed mod 3).
FuzzReport run_fuzz(const FuzzOptions& options);

std::string format_script(const InvariantTuple& start, const std::vector<std::string>& lines);

struct ReplayResult {
  int steps = 0;
  std::optional<FuzzFailure> failure;
};

// Replays a script, checking the tuple after every line. Throws ParseError on
// malformed scripts and MoveBlocked if a line no longer applies.
ReplayResult replay_script(std::string_view script);

}  // namespace rp2
