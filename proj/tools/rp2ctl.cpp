// rp2ctl: command-line front end for bouquet diagrams in the projective plane.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 fuzz violation.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rp2/diagram_io.hpp"
#include "rp2/fuzz.hpp"
#include "rp2/invariants.hpp"
#include "rp2/normal_form.hpp"
#include "rp2/render.hpp"

namespace {

constexpr int kDomainError = 1;
constexpr int kParseError = 2;
constexpr int kFuzzViolation = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    rp2::save_text(out_path, text);
  }
}

int cmd_validate(const std::string& path) {
  const auto violations = rp2::validate(rp2::load_diagram(path));
  for (const auto& v : violations) std::cout << "VIOLATION: " << rp2::to_string(v) << "\n";
  return violations.empty() ? 0 : kDomainError;
}

int cmd_invariants(const std::string& path) {
  std::cout << rp2::to_string(rp2::invariants(rp2::load_diagram(path))) << "\n";
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  const auto da = rp2::load_diagram(a);
  const auto db = rp2::load_diagram(b);
  if (da.n() != db.n()) {
    throw rp2::Error(rp2::ErrorCode::MismatchedLoopCount,
                     std::to_string(da.n()) + " loops vs " + std::to_string(db.n()));
  }
  const auto ta = rp2::invariants(da);
  const auto tb = rp2::invariants(db);
  if (ta == tb) {
    std::cout << "EQUIVALENT\n";
  } else {
    std::cout << "DISTINCT (";
    const auto diff = rp2::differing_components(ta, tb);
    for (std::size_t k = 0; k < diff.size(); ++k) std::cout << (k ? "," : "") << diff[k];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_realize(const std::string& tuple, const std::string& out) {
  emit(rp2::to_json(rp2::realize(rp2::parse_tuple(tuple))), out);
  return 0;
}

int cmd_enumerate(int n, const std::string& out) {
  std::string text;
  for (const auto& t : rp2::enumerate_classes(n)) text += rp2::to_string(t) + "\n";
  emit(text, out);
  return 0;
}

void report_failure(const rp2::FuzzFailure& f, const std::string& out) {
  std::cout << "VIOLATION: trial=" << f.trial << " step=" << f.step << " expected " << rp2::to_string(f.expected)
            << " got " << rp2::to_string(f.actual) << "\n";
  if (out.empty()) {
    std::cout << f.script;
  } else {
    rp2::save_text(out, f.script);
    std::cout << "replay script written to " << out << "\n";
  }
}

int cmd_fuzz(std::uint64_t seed, int steps, int trials, const std::string& replay, const std::string& out) {
  if (!replay.empty()) {
    const auto r = rp2::replay_script(rp2::load_text(replay));
    if (r.failure) {
      report_failure(*r.failure, out);
      return kFuzzViolation;
    }
    std::cout << "replayed " << r.steps << " steps, invariants unchanged\n";
    return 0;
  }
  const auto report = rp2::run_fuzz({seed, steps, trials});
  std::cout << "seed=" << seed << " steps=" << steps << " trials=" << report.trials_run
            << " passed=" << report.trials_passed << " moves=" << report.moves_applied << "\n";
  if (report.failure) {
    report_failure(*report.failure, out);
    return kFuzzViolation;
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& out) {
  emit(rp2::render_svg(rp2::load_diagram(path)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bouquet immersions in the projective plane: validation, invariants, normal forms, fuzzing"};
  app.require_subcommand(1);

  std::string path, path_b, tuple, replay, out;
  int n = 1;
  std::uint64_t seed = 42;
  int steps = 20;
  int trials = 100;

  auto* validate = app.add_subcommand("validate", "check generic position; exit 1 with VIOLATION lines if invalid");
  validate->add_option("diagram", path, "diagram JSON")->required();

  auto* inv = app.add_subcommand("invariants", "print the invariant tuple");
  inv->add_option("diagram", path, "diagram JSON")->required();

  auto* equiv = app.add_subcommand("equiv", "decide regular homotopy of two diagrams");
  equiv->add_option("a", path, "first diagram JSON")->required();
  equiv->add_option("b", path_b, "second diagram JSON")->required();

  auto* realize = app.add_subcommand("realize", "build a normal-form diagram for a tuple");
  realize->add_option("tuple", tuple, "e.g. \"order=e1,e1^-1; h=1; w=0\"")->required();
  realize->add_option("--out", out, "write JSON here instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "list every invariant tuple for n loops");
  enumerate->add_option("n", n, "number of loops")->required();
  enumerate->add_option("--out", out, "write the list here instead of stdout");

  auto* fuzz = app.add_subcommand("fuzz", "random move campaign checking invariant constancy");
  fuzz->add_option("--seed", seed, "campaign seed");
  fuzz->add_option("--steps", steps, "moves per trial")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--trials", trials, "number of trials")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--replay", replay, "replay a move script instead of running a campaign");
  fuzz->add_option("--out", out, "where to write the replay script of a violation");

  auto* render = app.add_subcommand("render-svg", "draw a diagram as SVG");
  render->add_option("diagram", path, "diagram JSON")->required();
  render->add_option("--out", out, "write SVG here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*inv) return cmd_invariants(path);
    if (*equiv) return cmd_equiv(path, path_b);
    if (*realize) return cmd_realize(tuple, out);
    if (*enumerate) return cmd_enumerate(n, out);
    if (*fuzz) return cmd_fuzz(seed, steps, trials, replay, out);
    if (*render) return cmd_render(path, out);
  } catch (const rp2::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == rp2::ErrorCode::ParseError ? kParseError : kDomainError;
  }
  return kDomainError;
}
