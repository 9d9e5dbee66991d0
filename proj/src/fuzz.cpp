#include "rp2/fuzz.hpp"

#include <sstream>

#include "rp2/normal_form.hpp"
#include "rp2/random_diagram.hpp"

namespace rp2 {

std::string format_script(const InvariantTuple& start, const std::vector<std::string>& lines) {
  std::string out = "# start " + to_string(start) + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t trial_seed = mix_seed(options.seed, static_cast<std::uint64_t>(trial));
    const int n = 1 + static_cast<int>(trial_seed % 3);
    RandomDiagram r = random_diagram(n, trial_seed);
    std::vector<std::string> lines;
    for (const auto& m : r.scramble) lines.push_back(format_move(m));
    ++report.trials_run;

    auto fail = [&](int step, InvariantTuple actual) {
      report.failure = FuzzFailure{trial, step, r.start, std::move(actual), format_script(r.start, lines)};
    };
    InvariantTuple now = invariants(r.diagram);
    if (now != r.start) {
      fail(static_cast<int>(lines.size()), now);
      return report;
    }
    BouquetDiagram d = std::move(r.diagram);
    for (int step = 0; step < options.steps; ++step) {
      AppliedMove m = random_applied_move(d, mix_seed(trial_seed, static_cast<std::uint64_t>(step)));
      lines.push_back(format_move(m.move));
      d = std::move(m.result);
      ++report.moves_applied;
      now = invariants(d);
      if (now != r.start) {
        fail(static_cast<int>(lines.size()), now);
        return report;
      }
    }
    ++report.trials_passed;
  }
  return report;
}

ReplayResult replay_script(std::string_view script) {
  std::istringstream in{std::string(script)};
  std::string line;
  std::optional<InvariantTuple> start;
  std::vector<std::string> lines;
  std::optional<BouquetDiagram> d;
  ReplayResult result;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      const std::string tag = "# start ";
      if (!start && line.rfind(tag, 0) == 0) {
        start = parse_tuple(line.substr(tag.size()));
        d = realize(*start);
      }
      continue;
    }
    if (!start) throw Error(ErrorCode::ParseError, "script has no '# start' line before its first move");
    const ScriptLine s = parse_script_line(line);
    d = s.move ? apply_move(*d, *s.move) : apply_edit(*d, *s.edit);
    lines.push_back(line);
    ++result.steps;
    InvariantTuple now = invariants(*d);
    if (now != *start) {
      result.failure = FuzzFailure{-1, result.steps, *start, std::move(now), format_script(*start, lines)};
      return result;
    }
  }
  if (!start) throw Error(ErrorCode::ParseError, "script has no '# start' line");
  return result;
}

}  // namespace rp2
