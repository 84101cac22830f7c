#include "gbs/modular.hpp"

#include <deque>
#include <map>

namespace gbs {

Rational pathModulus(const LabeledGraph& g, const EdgePath& path) {
  checkPath(g, path);
  Rational q = 1;
  for (const auto& h : path) q *= Rational(g.label(h)) / Rational(g.label(reverseHalf(h)));
  return q;
}

namespace {

// Spanning-tree sign propagation.  Assign s : V -> {+1,-1} from a BFS tree
// so that every pair {e,~e} can receive an edge sign sigma with
// s(origin)*sigma*label > 0 on both halves; the pair constraint is
// s(x)*s(y) == sign(label(e)*label(~e)).  A non-tree pair violating its
// constraint closes a cycle of negative modulus sign.
struct SignAssignment {
  std::map<VertexId, int> s;
  // parent tree half-edge leading into each vertex (empty for the root)
  std::map<VertexId, HalfEdgeId> parent;
  std::optional<HalfEdgeId> badPair;  // non-tree pair breaking consistency
};

SignAssignment propagateSigns(const LabeledGraph& g) {
  SignAssignment out;
  if (g.vertices().empty()) return out;
  const VertexId root = *g.vertices().begin();
  out.s[root] = 1;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const auto& h : g.halfEdgesAt(x)) {
      const VertexId y = g.terminus(h);
      const int pairSign = signInt(g.label(h)) * signInt(g.label(reverseHalf(h)));
      auto it = out.s.find(y);
      if (it == out.s.end()) {
        out.s[y] = out.s[x] * pairSign;
        out.parent[y] = h;
        queue.push_back(y);
      } else if (it->second != out.s[x] * pairSign && !out.badPair) {
        out.badPair = h;
      }
    }
  }
  return out;
}

EdgePath treePathFromRoot(const LabeledGraph& g, const SignAssignment& sa, const VertexId& v) {
  EdgePath reversed;
  VertexId cur = v;
  while (sa.parent.count(cur)) {
    const HalfEdgeId& h = sa.parent.at(cur);
    reversed.push_back(h);
    cur = g.origin(h);
  }
  return EdgePath(reversed.rbegin(), reversed.rend());
}

}  // namespace

std::optional<EdgePath> negativeModulusCycle(const LabeledGraph& g) {
  const SignAssignment sa = propagateSigns(g);
  if (!sa.badPair) return std::nullopt;
  // Cycle: root -> origin(bad), the bad half-edge, then terminus(bad) -> root.
  const HalfEdgeId bad = *sa.badPair;
  EdgePath cycle = treePathFromRoot(g, sa, g.origin(bad));
  cycle.push_back(bad);
  EdgePath back = treePathFromRoot(g, sa, g.terminus(bad));
  for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(reverseHalf(*it));
  return cycle;
}

bool orientationCharacterTrivial(const LabeledGraph& g) {
  return !negativeModulusCycle(g).has_value();
}

PositiveLabelsResult makeLabelsPositive(const LabeledGraph& g) {
  if (auto witness = negativeModulusCycle(g)) {
    std::string cycle;
    for (const auto& h : *witness) cycle += (cycle.empty() ? "" : " ") + h;
    throw GraphError("makeLabelsPositive: orientation character is nontrivial; cycle [" + cycle +
                     "] has negative modulus");
  }
  const SignAssignment sa = propagateSigns(g);
  PositiveLabelsResult out{g, {}};
  // Vertex sign changes for s(v) = -1, in id order.
  for (const auto& v : g.vertices()) {
    if (sa.s.at(v) == -1) {
      VertexSignChange m{v};
      out.graph = applyVertexSignChange(out.graph, m);
      out.moves.push_back(m);
    }
  }
  // Residual edge sign changes for pairs still negative, in id order.  After
  // the vertex pass both halves of a pair carry the same sign (that is what
  // the consistency constraint guarantees).
  for (const auto& pid : out.graph.pairIds()) {
    if (out.graph.label(pid) < 0) {
      EdgeSignChange m{pid};
      out.graph = applyEdgeSignChange(out.graph, m);
      out.moves.push_back(m);
    }
  }
  for (const auto& h : out.graph.halfEdgeIds())
    if (out.graph.label(h) < 0)
      throw GraphError("makeLabelsPositive: internal error, residual negative label on " + h);
  return out;
}

}  // namespace gbs
