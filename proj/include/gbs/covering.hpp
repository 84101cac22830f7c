// covering.hpp — admissible branched coverings of labeled graphs.
//
// A branched covering consists of a graph morphism p from a source labeled
// graph onto a target one together with positive branching degrees on the
// source vertices and edges.  Admissibility at a source vertex u over v and
// a target half-edge e at v, with k = gcd(d(u), |label(e)|), demands:
//   (1) exactly k half-edges at u map to e,
//   (2) each such half-edge carries label label(e)/k,
//   (3) each such half-edge's pair has degree d(u)/k.
// The covering index is the constant sum of vertex degrees over each fiber.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct BranchedCovering {
  LabeledGraph source;
  LabeledGraph target;
  std::map<VertexId, VertexId> vertexMap;
  // Image of each source pair id, given as a target half-edge id; a value
  // "~x" sends the forward half of the source pair to the reverse half of
  // target pair x.
  std::map<HalfEdgeId, HalfEdgeId> edgeMap;
  // Branching degrees, keyed by source vertex ids and source pair ids.
  std::map<std::string, Integer> degree;

  // Image of an arbitrary source half-edge (commutes with reverse).
  HalfEdgeId halfImage(const HalfEdgeId& h) const;
  const Integer& degreeOf(const std::string& id) const;
};

// Full admissibility diagnostics; empty result means valid.
std::vector<std::string> validateCovering(const BranchedCovering& c);

// The covering index (throws GraphError when the covering is invalid or the
// fiber sums disagree, quoting the offending fibers).
Integer coveringIndex(const BranchedCovering& c);

// Composition of coverings (inner first: the composite maps the source of
// `inner` through inner then `outer`); degrees multiply along the map.
// Requires inner.target == outer.source.
BranchedCovering composeCoverings(const BranchedCovering& outer, const BranchedCovering& inner);

// The identity covering of a graph (all degrees 1).
BranchedCovering identityCovering(const LabeledGraph& g);

}  // namespace gbs
