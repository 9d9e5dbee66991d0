#pragma once

// Regular-homotopy moves on bouquet diagrams, plus two deliberately
// non-regular edits used as negative controls.
//
// Every move carries explicit rational construction data; legality is decided
// after construction by the exact validator and by move-specific crossing
// checks. A move that cannot be realized throws MoveBlocked.
//
// Parameter layouts (all rationals; indices are integers stored as n/1):
//
//   Subdivide   f                        insert a point at fraction f
//   Jiggle      k m                      move the end point b of the target
//                                        segment to b + k((a+c)/2 - b) + m perp(c-a)
//   KinkPair    f h side                 two opposite kinks centred at f,
//                                        template scale h, first kink on the
//                                        left if side = 1, right if side = -1
//   FingerPush  fa fb loop leg seg g tau kappa
//                                        push [fa,fb] of the target across the
//                                        strand segment (loop,leg,seg) near its
//                                        fraction g; tip overshoot tau, tip
//                                        half-width kappa
//   Detour      sigma fa fb qx qy rx ry depth exit h
//                                        route [fa,fb] out through seam point q,
//                                        back in at -q, across to r, back in at
//                                        -r; two same-sign kinks of scale h on
//                                        the short hop near -q. Changes the
//                                        signed index by 2*sigma (orientation +1)
//
//   SingleKink  f h side                 one kink (Reidemeister 1, not regular)
//   SeamReroute fa fb qx qy depth        route [fa,fb] out at q and back in at -q

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rp2/diagram.hpp"

namespace rp2 {

enum class MoveKind { KinkPair, Detour, FingerPush, Jiggle, Subdivide };
enum class EditKind { SingleKink, SeamReroute };

std::string_view to_string(MoveKind k);
std::string_view to_string(EditKind k);

struct MoveSpec {
  MoveKind kind = MoveKind::Subdivide;
  SegmentRef target;
  std::vector<Rat> params;
  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct EditSpec {
  EditKind kind = EditKind::SingleKink;
  SegmentRef target;
  std::vector<Rat> params;
  friend bool operator==(const EditSpec&, const EditSpec&) = default;
};

BouquetDiagram apply_move(const BouquetDiagram& d, const MoveSpec& m);

struct EditReport {
  int loop = 0;
  int self_crossings_created = 0;  // may be negative
  bool inv3_flipped = false;
};

BouquetDiagram apply_edit(const BouquetDiagram& d, const EditSpec& e, EditReport* report = nullptr);

// Upper bound on construction attempts inside random_move / random_edit.
inline constexpr int kMaxMoveAttempts = 10000;

// A legal move for d, chosen deterministically from the seed. Throws Exhausted
// after kMaxMoveAttempts failed candidates.
MoveSpec random_move(const BouquetDiagram& d, std::uint64_t seed);
MoveSpec random_move(const BouquetDiagram& d, std::uint64_t seed, MoveKind kind);

struct AppliedMove {
  MoveSpec move;
  BouquetDiagram result;
};
// random_move together with its (already computed) result.
AppliedMove random_applied_move(const BouquetDiagram& d, std::uint64_t seed, std::optional<MoveKind> kind = {});

EditSpec random_edit(const BouquetDiagram& d, std::uint64_t seed, EditKind kind);

// Move-script lines: "KIND loop leg segment p1 p2 ...", rationals as n/d.
std::string format_move(const MoveSpec& m);
std::string format_edit(const EditSpec& e);
// Parses one line of either kind; throws ParseError.
struct ScriptLine {
  std::optional<MoveSpec> move;
  std::optional<EditSpec> edit;
};
ScriptLine parse_script_line(std::string_view line);

// Deterministic 64-bit mixer used to derive sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace rp2
