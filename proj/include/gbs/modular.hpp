// modular.hpp — the modular homomorphism and label sign normalization.
//
// A closed edge path c determines the exact rational
//   modulus(c) = prod label(h) / label(reverse(h))  over the steps h of c,
// which only depends on the underlying group element.  Its sign over all
// cycles is the orientation character; when the character is trivial every
// label can be made positive by sign-change moves.
#pragma once

#include <optional>

#include "gbs/graph.hpp"
#include "gbs/moves.hpp"

namespace gbs {

// Exact modulus of a path (meaningful for closed paths; computed as the
// label product for any composable path).
Rational pathModulus(const LabeledGraph& g, const EdgePath& path);

// True iff every cycle has positive modulus.
bool orientationCharacterTrivial(const LabeledGraph& g);

struct PositiveLabelsResult {
  LabeledGraph graph;    // all labels positive
  MoveScript moves;      // vertex/edge sign changes realizing the change
};

// Normalizes every label to be positive via sign-change moves, or throws
// GraphError carrying a witness cycle of negative modulus when impossible.
PositiveLabelsResult makeLabelsPositive(const LabeledGraph& g);

// A cycle with negative modulus if one exists (witness for the nontrivial
// orientation character), std::nullopt otherwise.
std::optional<EdgePath> negativeModulusCycle(const LabeledGraph& g);

}  // namespace gbs
