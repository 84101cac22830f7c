// profiles.hpp — comparing depth profiles up to rescaling.
//
// The tail of a symbolic profile determines a cyclic sequence of successive
// ratios; the primitive cycle is invariant under rescaling, so differing
// cycles prove two profiles inequivalent.  Equivalence is certified by an
// explicit witness pair (r, r') with S1/r = S2/r'.
#pragma once

#include <optional>
#include <string>

#include "gbs/depth.hpp"

namespace gbs {

struct RatioCycle {
  // One primitive period of tail ratios, in the lexicographically least
  // rotation; entries are integers >= 2 whose product is the primitive ratio.
  std::vector<Integer> ratios;
  bool operator==(const RatioCycle&) const = default;
};

std::string toString(const RatioCycle& c);

// The canonical primitive ratio cycle of a symbolic profile's tail.
RatioCycle tailRatioCycle(const SymbolicProfile& p);

enum class CompareVerdict { Equivalent, Inequivalent, Unknown };

struct CompareResult {
  CompareVerdict verdict = CompareVerdict::Unknown;
  std::optional<std::pair<Integer, Integer>> witness;  // (r, r') when Equivalent
  std::string reason;
};

// Decides equivalence-up-to-rescaling where possible: Inequivalent when the
// primitive tail cycles differ (a proof), Equivalent with the
// lexicographically least witness (r, r') with r, r' <= bound and
// S1/r = S2/r' as sets, Unknown when the cycles agree but no witness within
// the bound exists.
CompareResult compareProfiles(const SymbolicProfile& p1, const SymbolicProfile& p2,
                              const Integer& bound = 10000);

struct TruncatedWitnessResult {
  std::optional<std::pair<Integer, Integer>> witness;
  // Always true: agreement (or its absence) over truncated sets restricted
  // to the common range is evidence, never a proof.
  bool truncationCaveat = true;
};

// Exhaustive search over r, r' <= bound for rescaled truncated sets that
// agree on [1, min(max S1/r, max S2/r')]; returns the lexicographically
// least witness pair if any.
TruncatedWitnessResult equivalentTruncated(const TruncatedProfile& s1, const TruncatedProfile& s2,
                                           const Integer& bound);

}  // namespace gbs
