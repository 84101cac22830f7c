// segment.hpp — segment indices in the tree associated to a labeled graph.
//
// A path through the graph crosses a sequence of edges; step h contributes
// the index pair (|label(h)|, |label(reverse h)|).  For such a sequence the
// segment index is the index of the stabilizer of the whole segment inside
// the stabilizer of its initial vertex: the least r >= 1 with n_1 | r and
// N_l | r * M_{l-1} for every prefix, where N_l and M_l are the prefix
// products of the n_i and m_i.
#pragma once

#include <utility>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

// Entries must be nonzero; indices only depend on absolute values.
using IndexPair = std::pair<Integer, Integer>;
using IndexSequence = std::vector<IndexPair>;

// Least r >= 1 with |n_1| dividing r and N_l | r * M_{l-1} for all l.
// Computed by the prefix closed form lcm_l( N_l / gcd(N_l, M_{l-1}) ).
// Empty sequences have index 1.  Throws on zero entries.
Integer segmentIndex(const IndexSequence& seq);

// Index of the segment traversed backwards: the pairs are swapped and the
// order reversed.
Integer reverseIndex(const IndexSequence& seq);

// Whether the stabilizer of the initial vertex fixes the whole segment
// pointwise, i.e. prod_{i=2..l} n_i divides prod_{i=1..l-1} m_i for all l.
// Equivalent to segmentIndex(seq) == |n_1| for nonempty sequences.
bool fixesSegment(const IndexSequence& seq);

// Extends (idx, ridx) of a segment by one further pair (n, m) on the right,
// using the concatenation rule for segment indices.
IndexPair extendIndexPair(const IndexPair& idxAndReverse, const Integer& n, const Integer& m);

// The index sequence read off a composable edge path.
IndexSequence pathIndexSequence(const LabeledGraph& g, const EdgePath& path);

}  // namespace gbs
