#pragma once

// Normal-form representatives for every invariant value, and enumeration of
// the full invariant codomain for small n.

#include <vector>

#include "rp2/diagram.hpp"
#include "rp2/invariants.hpp"

namespace rp2 {

// A valid diagram whose invariants equal t. The vertex sits at the disk centre;
// half-edges leave along a fan of rational spokes in the cyclic order of
// t.order. Contractible loops close up inside the disk, the others pass once
// through the seam, and one kink fixes the self-crossing parity if needed.
// Throws Internal if the self-check ever fails.
BouquetDiagram realize(const InvariantTuple& t);

// Largest n accepted by enumerate_classes: n = 4 already yields 645120 tuples,
// n = 5 would yield about 1.9e8.
inline constexpr int kMaxEnumerateLoops = 4;

// All invariant tuples for n loops in increasing order. Throws LimitExceeded
// for n > kMaxEnumerateLoops and for n < 1.
std::vector<InvariantTuple> enumerate_classes(int n);

// All canonical cyclic words on 2n symbols, increasing.
std::vector<CyclicWord> enumerate_words(int n);

// The class of d, which is its invariant tuple.
InvariantTuple classify(const BouquetDiagram& d);

}  // namespace rp2
