#pragma once

// The complete regular-homotopy invariant of a bouquet immersion:
//   order - cyclic order of half-edges at the vertex, up to rotation and
//           reversal (reversal = change of local orientation);
//   h     - class of each loop in pi_1 of the projective plane (Z/2);
//   w     - self-intersection index of each loop, mod 2.

#include <string>
#include <string_view>
#include <vector>

#include "rp2/diagram.hpp"

namespace rp2 {

// Symbol code: 2*loop for e_{loop+1}, 2*loop+1 for its inverse. The integer
// order is the symbol order e1 < e1^-1 < e2 < e2^-1 < ...
using Symbol = int;

inline Symbol symbol_of(const HalfEdge& h) { return 2 * h.loop + (h.incoming ? 1 : 0); }
std::string symbol_name(Symbol s);

class CyclicWord {
 public:
  // Canonicalizes `raw`: lexicographic minimum over all rotations of the word
  // and of its reversal. Throws DuplicateSymbol / MissingSymbol unless raw is a
  // permutation of the 2n symbols.
  static CyclicWord canonical(std::vector<Symbol> raw);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  int n() const { return static_cast<int>(symbols_.size()) / 2; }
  std::string to_string() const;  // "e1,e2,e1^-1,e2^-1"

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Minimum over the 4n rotations/reversals; raw must already be a permutation.
std::vector<Symbol> min_rotation_reversal(const std::vector<Symbol>& raw);

struct InvariantTuple {
  CyclicWord order;
  std::vector<int> h;  // 0/1 per loop
  std::vector<int> w;  // 0/1 per loop

  int n() const { return static_cast<int>(h.size()); }
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
  friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
};

// "order=e1,e2,e1^-1,e2^-1; h=10; w=01"
std::string to_string(const InvariantTuple& t);
// Inverse of to_string; throws ParseError on malformed text and
// Duplicate/MissingSymbol on a bad word.
InvariantTuple parse_tuple(std::string_view text);

// Local orientation of the tangent plane at the vertex; +1 is the disk's
// counterclockwise orientation.
enum class Orientation : int { Positive = 1, Negative = -1 };

CyclicWord inv1(const BouquetDiagram& d);
std::vector<int> inv2(const BouquetDiagram& d);
std::vector<int> inv3(const BouquetDiagram& d);

// Signed self-intersection index of loop i: each self-crossing (t1 < t2)
// contributes or * (-1)^(seam crossings before t1) * sign det(d(t1), d(t2)).
int signed_index(const BouquetDiagram& d, int loop, Orientation orientation = Orientation::Positive);

// Signed indices of all loops in one pass (crossings computed once).
std::vector<int> signed_indices(const BouquetDiagram& d, Orientation orientation = Orientation::Positive);
// Same, reusing an already computed crossings(d).
std::vector<int> signed_indices(const BouquetDiagram& d, const std::vector<Crossing>& cs, Orientation orientation);

InvariantTuple invariants(const BouquetDiagram& d);

// Whether the two immersions are regularly homotopic. Throws
// MismatchedLoopCount if the loop counts differ.
bool equiv(const BouquetDiagram& a, const BouquetDiagram& b);

// Names of the tuple components that differ ("order", "h", "w").
std::vector<std::string> differing_components(const InvariantTuple& a, const InvariantTuple& b);

}  // namespace rp2
