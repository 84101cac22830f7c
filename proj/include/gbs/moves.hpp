// moves.hpp — elementary deformations of labeled graphs.
//
// The move vocabulary: collapse an edge whose far label is a unit, expand
// (the inverse), slide an edge end across a parallel edge, and the two sign
// changes.  Moves transform presentations without changing the group, and a
// move script is an ordered list replayable with applyScript.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

// Collapse the edge pair of `edge` in the direction of `edge`: requires a
// non-loop with |label(reverse(edge))| = 1.  The terminus is merged into the
// origin; every half-edge h re-rooted by the merge gets
// label(h) := label(edge) * label(reverse(edge)) * label(h).
struct CollapseMove {
  HalfEdgeId edge;
  bool operator==(const CollapseMove&) const = default;
};

// Inverse of collapse.  Introduces newVertex and the edge pair newEdge from
// `vertex` to newVertex with labels (n at vertex, sign at newVertex), and
// re-roots the half-edges in `halfEdges` (all originating at vertex, with
// sign*n dividing each label) at newVertex, dividing their labels by sign*n.
struct ExpandMove {
  VertexId vertex;
  std::vector<HalfEdgeId> halfEdges;
  Integer n;
  int sign = 1;
  VertexId newVertex;
  HalfEdgeId newEdge;
  bool operator==(const ExpandMove&) const = default;
};

// Slide the end `slide` across the edge of `along`: requires
// origin(slide) == terminus(along), slide not in {along, reverse(along)},
// and label(reverse(along)) | label(slide).  The slid end moves to
// origin(along) with label (label(slide)/label(reverse(along))) * label(along).
struct SlideMove {
  HalfEdgeId slide;
  HalfEdgeId along;
  bool operator==(const SlideMove&) const = default;
};

// Flip the labels of every half-edge originating at `vertex`.
struct VertexSignChange {
  VertexId vertex;
  bool operator==(const VertexSignChange&) const = default;
};

// Flip both labels of one edge pair.
struct EdgeSignChange {
  HalfEdgeId edge;
  bool operator==(const EdgeSignChange&) const = default;
};

using Move = std::variant<CollapseMove, ExpandMove, SlideMove, VertexSignChange, EdgeSignChange>;
using MoveScript = std::vector<Move>;

// Each apply function validates its preconditions (GraphError on violation)
// and returns the transformed graph.
LabeledGraph applyCollapse(const LabeledGraph& g, const CollapseMove& m);
LabeledGraph applyExpand(const LabeledGraph& g, const ExpandMove& m);
LabeledGraph applySlide(const LabeledGraph& g, const SlideMove& m);
LabeledGraph applyVertexSignChange(const LabeledGraph& g, const VertexSignChange& m);
LabeledGraph applyEdgeSignChange(const LabeledGraph& g, const EdgeSignChange& m);
LabeledGraph applyMove(const LabeledGraph& g, const Move& m);
LabeledGraph applyScript(const LabeledGraph& g, const MoveScript& script);

// Repeatedly collapses the lexicographically smallest collapsible half-edge
// until none remains; returns the reduced graph and the moves performed.
struct ReduceResult {
  LabeledGraph graph;
  MoveScript moves;
};
ReduceResult reduce(const LabeledGraph& g);

enum class IsoMode { Exact, UpToSignChange };

// Isomorphism of labeled graphs: a bijection of vertices and half-edges
// commuting with origin and reverse and preserving labels (exactly, or up to
// an admissible family of sign changes).  Exhaustive with pruning; refuses
// graphs beyond 12 vertices / 24 edge pairs unless the guard override is set.
bool isomorphic(const LabeledGraph& g1, const LabeledGraph& g2, IsoMode mode);

}  // namespace gbs
