// depth.hpp — depth profiles: the set of segment indices of unimodular
// closed paths based at a vertex.
//
// Two flavors are computed.  A truncated profile enumerates closed edge
// paths up to a length horizon and collects the segment indices of the
// unimodular ones.  A symbolic profile describes an infinite profile as a
// finite head together with geometric tails {c * Q^i : i >= 0}; all profiles
// here satisfy the divisibility-chain property (sorted elements divide their
// successors), which makes equality of symbolic profiles decidable.
#pragma once

#include <set>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/segment.hpp"

namespace gbs {

struct TruncatedProfile {
  std::set<Integer> values;
  int lengthBound = 0;
  bool operator==(const TruncatedProfile&) const = default;
};

struct SymbolicProfile {
  std::vector<Integer> head;        // strictly increasing, disjoint from tails
  std::vector<Integer> tailScales;  // strictly increasing scales c_1 < ... < c_p
  Integer ratio;                    // common ratio Q >= 2
  bool operator==(const SymbolicProfile&) const = default;
};

// Sufficient (sound) certificate that the group of g is not Z, Z x Z or the
// Klein bottle group: reduce g, then certify unless the reduced graph is a
// point, a loop with both labels +-1, or a single non-loop edge with both
// absolute labels 2.
bool certifyNonElementary(const LabeledGraph& g);

// Depth of a single segment: alias for its segment index.
inline Integer depthOfSequence(const IndexSequence& seq) { return segmentIndex(seq); }

// Enumerates closed edge paths at `base` of length <= maxLen (immediate
// backtracking h then reverse(h) is only allowed when |label(reverse h)|
// >= 2), keeps the ones of unimodular modulus, and records their segment
// indices together with 1.  Requires certifyNonElementary(g); refuses
// maxLen > 12 unless the guard override is set.
TruncatedProfile truncatedProfile(const LabeledGraph& g, const VertexId& base, int maxLen);

// The profile of a wedge of loops with labels (1, N) and (n_j, n_j): the set
// {n_j * N^i}.  Hypotheses checked: N >= 2, 1 is a divisor entry, every n_j
// divides N, and {n_j} together with N is closed under lcm.
SymbolicProfile wedgeProfile(const Integer& N, const std::vector<Integer>& divisors);

// Rescaling by r >= 1 maps every element t to t / gcd(t, r).
TruncatedProfile rescaleProfile(const TruncatedProfile& p, const Integer& r);
SymbolicProfile rescaleProfile(const SymbolicProfile& p, const Integer& r);

// Canonical form: unique representation of the underlying infinite set
// (primitive ratio, minimal scales, head disjoint from and below the tails).
// Canonical forms are equal iff the underlying sets are equal.
SymbolicProfile canonicalizeProfile(const SymbolicProfile& p);

// Structural diagnostics (sortedness, positivity, ratio >= 2, divisibility
// chain sampled beyond the head); empty means well-formed.
std::vector<std::string> checkSymbolicProfile(const SymbolicProfile& p);

// All elements of the symbolic profile up to the bound, sorted.
std::set<Integer> symbolicValuesUpTo(const SymbolicProfile& p, const Integer& bound);

}  // namespace gbs
