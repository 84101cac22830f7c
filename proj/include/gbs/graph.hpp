// graph.hpp — labeled graphs with involutive half-edges.
//
// A labeled graph is a finite connected graph given by half-edges: every
// geometric edge is a pair {h, reverse(h)}, each half carrying the vertex it
// originates from and a nonzero integer label.  The label on h is the index
// datum attached to the end of the edge sitting at origin(h).
//
// Identifiers are opaque strings.  A geometric edge pair with id "e" has
// half-edge ids "e" (the forward half, origin = the edge's `from` vertex)
// and "~e" (the reverse half).  User-supplied pair ids must not start with
// '~' so that the involution is a pure string operation.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbs/numeric.hpp"

namespace gbs {

using VertexId = std::string;
using HalfEdgeId = std::string;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool isReverseHalf(const HalfEdgeId& h) { return !h.empty() && h[0] == '~'; }

inline HalfEdgeId reverseHalf(const HalfEdgeId& h) {
  if (h.empty()) throw GraphError("reverseHalf: empty half-edge id");
  return isReverseHalf(h) ? h.substr(1) : "~" + h;
}

// The geometric edge pair id underlying a half-edge id.
inline HalfEdgeId pairIdOf(const HalfEdgeId& h) { return isReverseHalf(h) ? h.substr(1) : h; }

class LabeledGraph {
 public:
  void addVertex(const VertexId& v);
  // Adds the pair {pid, ~pid} with origin(pid) = from and label(pid) =
  // labelAtFrom.  Both vertices must already exist; labels must be nonzero.
  void addEdge(const HalfEdgeId& pid, const VertexId& from, const VertexId& to,
               const Integer& labelAtFrom, const Integer& labelAtTo);
  void removeEdge(const HalfEdgeId& pid);
  // Removes an isolated vertex.
  void removeVertex(const VertexId& v);

  bool hasVertex(const VertexId& v) const { return vertices_.count(v) != 0; }
  bool hasHalf(const HalfEdgeId& h) const { return halves_.count(h) != 0; }
  bool hasPair(const HalfEdgeId& pid) const {
    return !isReverseHalf(pid) && halves_.count(pid) != 0;
  }

  const VertexId& origin(const HalfEdgeId& h) const { return half(h).origin; }
  const VertexId& terminus(const HalfEdgeId& h) const { return half(reverseHalf(h)).origin; }
  const Integer& label(const HalfEdgeId& h) const { return half(h).label; }
  void setLabel(const HalfEdgeId& h, const Integer& v);
  bool isLoop(const HalfEdgeId& h) const { return origin(h) == terminus(h); }

  // Sorted views.  halfEdgesAt returns all half-edges originating at v in
  // lexicographic id order; pairIds returns the forward halves only.
  const std::set<VertexId>& vertices() const { return vertices_; }
  std::vector<HalfEdgeId> halfEdgeIds() const;
  std::vector<HalfEdgeId> pairIds() const;
  std::vector<HalfEdgeId> halfEdgesAt(const VertexId& v) const;

  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t pairCount() const;

  bool connected() const;

  // Structural diagnostics: empty result means the graph is a valid
  // connected labeled graph.  Construction already enforces the local
  // invariants, so this mostly reports connectivity problems and is the
  // hook used by the CLI after parsing untrusted input.
  std::vector<std::string> validate() const;

  bool operator==(const LabeledGraph& other) const = default;

 private:
  struct Half {
    VertexId origin;
    Integer label;
    bool operator==(const Half&) const = default;
  };

  const Half& half(const HalfEdgeId& h) const {
    auto it = halves_.find(h);
    if (it == halves_.end()) throw GraphError("unknown half-edge id: " + h);
    return it->second;
  }

  std::set<VertexId> vertices_;
  std::map<HalfEdgeId, Half> halves_;
};

// Orientation: a choice of one "plus" half per edge pair.  Used by the
// lattice checks and to direct vertical edges in ball construction.
class DirectedStructure {
 public:
  DirectedStructure() = default;
  explicit DirectedStructure(std::set<HalfEdgeId> plusHalves) : plus_(std::move(plusHalves)) {}

  void markPlus(const HalfEdgeId& h);
  bool isPlus(const HalfEdgeId& h) const { return plus_.count(h) != 0; }
  const std::set<HalfEdgeId>& plusHalves() const { return plus_; }

  // Checks that exactly one half of every pair of g is marked.
  std::vector<std::string> validateAgainst(const LabeledGraph& g) const;

  bool operator==(const DirectedStructure&) const = default;

 private:
  std::set<HalfEdgeId> plus_;
};

// An edge path is a sequence of half-edges with origin(next) == terminus(prev).
using EdgePath = std::vector<HalfEdgeId>;

void checkPath(const LabeledGraph& g, const EdgePath& path);
bool isClosedPath(const LabeledGraph& g, const EdgePath& path);

// Guard overrides: several operations refuse inputs beyond documented size
// guards; setting the environment variable GBS_GUARD_OVERRIDE=1 lifts them.
bool guardOverrideActive();
void checkGuard(bool withinGuard, const std::string& message);

}  // namespace gbs
