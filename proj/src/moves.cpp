#include "gbs/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gbs {

namespace {

LabeledGraph rebuildWith(const LabeledGraph& g,
                         const std::map<VertexId, VertexId>& vertexRename,
                         const std::set<VertexId>& dropVertices,
                         const std::set<HalfEdgeId>& dropPairs,
                         const std::map<HalfEdgeId, std::pair<VertexId, Integer>>& reroot) {
  // Helper shared by collapse: rebuild the graph applying vertex renames,
  // vertex/pair deletions and half-edge re-rootings (origin + label).
  LabeledGraph out;
  for (const auto& v : g.vertices()) {
    if (dropVertices.count(v)) continue;
    VertexId name = v;
    if (auto it = vertexRename.find(v); it != vertexRename.end()) name = it->second;
    out.addVertex(name);
  }
  for (const auto& pid : g.pairIds()) {
    if (dropPairs.count(pid)) continue;
    const HalfEdgeId rid = reverseHalf(pid);
    VertexId from = g.origin(pid);
    VertexId to = g.origin(rid);
    Integer lf = g.label(pid);
    Integer lt = g.label(rid);
    if (auto it = reroot.find(pid); it != reroot.end()) {
      from = it->second.first;
      lf = it->second.second;
    }
    if (auto it = reroot.find(rid); it != reroot.end()) {
      to = it->second.first;
      lt = it->second.second;
    }
    if (auto it = vertexRename.find(from); it != vertexRename.end()) from = it->second;
    if (auto it = vertexRename.find(to); it != vertexRename.end()) to = it->second;
    out.addEdge(pid, from, to, lf, lt);
  }
  return out;
}

}  // namespace

LabeledGraph applyCollapse(const LabeledGraph& g, const CollapseMove& m) {
  if (!g.hasHalf(m.edge)) throw GraphError("collapse: unknown half-edge: " + m.edge);
  if (g.isLoop(m.edge)) throw GraphError("collapse: cannot collapse a loop: " + m.edge);
  const HalfEdgeId rev = reverseHalf(m.edge);
  if (absInt(g.label(rev)) != 1)
    throw GraphError("collapse: far label of " + m.edge + " is not a unit: " + toString(g.label(rev)));
  const VertexId x = g.origin(m.edge);
  const VertexId y = g.terminus(m.edge);
  const Integer factor = g.label(m.edge) * g.label(rev);

  std::map<HalfEdgeId, std::pair<VertexId, Integer>> reroot;
  for (const auto& h : g.halfEdgesAt(y)) {
    if (h == rev) continue;
    reroot[h] = {x, factor * g.label(h)};
  }
  return rebuildWith(g, {}, {y}, {pairIdOf(m.edge)}, reroot);
}

LabeledGraph applyExpand(const LabeledGraph& g, const ExpandMove& m) {
  if (!g.hasVertex(m.vertex)) throw GraphError("expand: unknown vertex: " + m.vertex);
  if (m.n == 0) throw GraphError("expand: n must be nonzero");
  if (m.sign != 1 && m.sign != -1) throw GraphError("expand: sign must be +1 or -1");
  if (m.newVertex.empty() || g.hasVertex(m.newVertex))
    throw GraphError("expand: new vertex id unusable: " + m.newVertex);
  if (m.newEdge.empty() || isReverseHalf(m.newEdge) || g.hasHalf(m.newEdge))
    throw GraphError("expand: new edge id unusable: " + m.newEdge);
  const Integer divisor = Integer(m.sign) * m.n;
  std::set<HalfEdgeId> subset(m.halfEdges.begin(), m.halfEdges.end());
  if (subset.size() != m.halfEdges.size()) throw GraphError("expand: duplicate half-edge in subset");
  for (const auto& h : m.halfEdges) {
    if (!g.hasHalf(h)) throw GraphError("expand: unknown half-edge: " + h);
    if (g.origin(h) != m.vertex)
      throw GraphError("expand: half-edge " + h + " does not originate at " + m.vertex);
    if (!divides(divisor, g.label(h)))
      throw GraphError("expand: " + toString(divisor) + " does not divide label of " + h);
  }

  LabeledGraph out;
  for (const auto& v : g.vertices()) out.addVertex(v);
  out.addVertex(m.newVertex);
  for (const auto& pid : g.pairIds()) {
    const HalfEdgeId rid = reverseHalf(pid);
    VertexId from = g.origin(pid);
    VertexId to = g.origin(rid);
    Integer lf = g.label(pid);
    Integer lt = g.label(rid);
    if (subset.count(pid)) {
      from = m.newVertex;
      lf = lf / divisor;
    }
    if (subset.count(rid)) {
      to = m.newVertex;
      lt = lt / divisor;
    }
    out.addEdge(pid, from, to, lf, lt);
  }
  out.addEdge(m.newEdge, m.vertex, m.newVertex, m.n, Integer(m.sign));
  return out;
}

LabeledGraph applySlide(const LabeledGraph& g, const SlideMove& m) {
  if (!g.hasHalf(m.slide)) throw GraphError("slide: unknown half-edge: " + m.slide);
  if (!g.hasHalf(m.along)) throw GraphError("slide: unknown half-edge: " + m.along);
  if (pairIdOf(m.slide) == pairIdOf(m.along))
    throw GraphError("slide: cannot slide an edge along itself: " + m.slide);
  if (g.origin(m.slide) != g.terminus(m.along))
    throw GraphError("slide: " + m.slide + " does not originate at the far end of " + m.along);
  const Integer farLabel = g.label(reverseHalf(m.along));
  if (!divides(farLabel, g.label(m.slide)))
    throw GraphError("slide: label of " + reverseHalf(m.along) + " (" + toString(farLabel) +
                     ") does not divide label of " + m.slide + " (" + toString(g.label(m.slide)) + ")");

  LabeledGraph out;
  for (const auto& v : g.vertices()) out.addVertex(v);
  for (const auto& pid : g.pairIds()) {
    const HalfEdgeId rid = reverseHalf(pid);
    VertexId from = g.origin(pid);
    VertexId to = g.origin(rid);
    Integer lf = g.label(pid);
    Integer lt = g.label(rid);
    if (pid == m.slide) {
      from = g.origin(m.along);
      lf = (lf / farLabel) * g.label(m.along);
    }
    if (rid == m.slide) {
      to = g.origin(m.along);
      lt = (lt / farLabel) * g.label(m.along);
    }
    out.addEdge(pid, from, to, lf, lt);
  }
  return out;
}

LabeledGraph applyVertexSignChange(const LabeledGraph& g, const VertexSignChange& m) {
  if (!g.hasVertex(m.vertex)) throw GraphError("vertexSign: unknown vertex: " + m.vertex);
  LabeledGraph out = g;
  for (const auto& h : g.halfEdgesAt(m.vertex)) out.setLabel(h, -g.label(h));
  return out;
}

LabeledGraph applyEdgeSignChange(const LabeledGraph& g, const EdgeSignChange& m) {
  if (!g.hasPair(pairIdOf(m.edge)))
    throw GraphError("edgeSign: unknown edge: " + m.edge);
  const HalfEdgeId pid = pairIdOf(m.edge);
  LabeledGraph out = g;
  out.setLabel(pid, -g.label(pid));
  out.setLabel(reverseHalf(pid), -g.label(reverseHalf(pid)));
  return out;
}

LabeledGraph applyMove(const LabeledGraph& g, const Move& m) {
  if (auto* c = std::get_if<CollapseMove>(&m)) return applyCollapse(g, *c);
  if (auto* e = std::get_if<ExpandMove>(&m)) return applyExpand(g, *e);
  if (auto* s = std::get_if<SlideMove>(&m)) return applySlide(g, *s);
  if (auto* v = std::get_if<VertexSignChange>(&m)) return applyVertexSignChange(g, *v);
  return applyEdgeSignChange(g, std::get<EdgeSignChange>(m));
}

LabeledGraph applyScript(const LabeledGraph& g, const MoveScript& script) {
  LabeledGraph cur = g;
  for (const auto& m : script) cur = applyMove(cur, m);
  return cur;
}

ReduceResult reduce(const LabeledGraph& g) {
  ReduceResult out{g, {}};
  for (;;) {
    std::optional<HalfEdgeId> pick;
    for (const auto& h : out.graph.halfEdgeIds()) {
      if (out.graph.isLoop(h)) continue;
      if (absInt(out.graph.label(reverseHalf(h))) != 1) continue;
      pick = h;
      break;  // ids are iterated in sorted order
    }
    if (!pick) return out;
    CollapseMove m{*pick};
    out.graph = applyCollapse(out.graph, m);
    out.moves.push_back(m);
  }
}

// ------------------------------------------------------------------------
// Isomorphism

namespace {

struct VertexSignature {
  std::size_t degree = 0;
  std::multiset<Integer> labels;  // absolute values
  bool operator==(const VertexSignature&) const = default;
  bool operator<(const VertexSignature& o) const {
    if (degree != o.degree) return degree < o.degree;
    return labels < o.labels;
  }
};

VertexSignature signatureOf(const LabeledGraph& g, const VertexId& v, bool absolute) {
  VertexSignature s;
  for (const auto& h : g.halfEdgesAt(v)) {
    ++s.degree;
    s.labels.insert(absolute ? absInt(g.label(h)) : g.label(h));
  }
  return s;
}

struct IsoSearch {
  const LabeledGraph& g1;
  const LabeledGraph& g2;
  IsoMode mode;
  std::vector<HalfEdgeId> pairs1;
  std::map<VertexId, VertexId> vmap;      // g1 -> g2
  std::set<VertexId> vused;               // images
  std::map<HalfEdgeId, HalfEdgeId> hmap;  // g1 half -> g2 half
  std::set<HalfEdgeId> pused;             // used g2 pair ids

  bool labelMatches(const HalfEdgeId& h1, const HalfEdgeId& h2) const {
    if (mode == IsoMode::Exact) return g1.label(h1) == g2.label(h2);
    return absInt(g1.label(h1)) == absInt(g2.label(h2));
  }

  // Vertex assignment with backtracking support: returns whether consistent,
  // and whether it was newly inserted.
  bool assignVertex(const VertexId& a, const VertexId& b, bool& inserted) {
    inserted = false;
    auto it = vmap.find(a);
    if (it != vmap.end()) return it->second == b;
    if (vused.count(b)) return false;
    vmap[a] = b;
    vused.insert(b);
    inserted = true;
    return true;
  }

  void unassignVertex(const VertexId& a) {
    vused.erase(vmap.at(a));
    vmap.erase(a);
  }

  bool tryPair(std::size_t idx) {
    if (idx == pairs1.size()) return signConsistent();
    const HalfEdgeId p1 = pairs1[idx];
    const HalfEdgeId r1 = reverseHalf(p1);
    for (const auto& p2 : g2.pairIds()) {
      if (pused.count(p2)) continue;
      const HalfEdgeId r2 = reverseHalf(p2);
      // Try both orientations of the image pair.
      for (int flip = 0; flip < 2; ++flip) {
        const HalfEdgeId i1 = flip ? r2 : p2;
        const HalfEdgeId i2 = flip ? p2 : r2;
        if (!labelMatches(p1, i1) || !labelMatches(r1, i2)) continue;
        bool insA = false, insB = false;
        if (!assignVertex(g1.origin(p1), g2.origin(i1), insA)) continue;
        if (!assignVertex(g1.origin(r1), g2.origin(i2), insB)) {
          if (insA) unassignVertex(g1.origin(p1));
          continue;
        }
        pused.insert(p2);
        hmap[p1] = i1;
        hmap[r1] = i2;
        if (tryPair(idx + 1)) return true;
        hmap.erase(p1);
        hmap.erase(r1);
        pused.erase(p2);
        if (insB) unassignVertex(g1.origin(r1));
        if (insA) unassignVertex(g1.origin(p1));
      }
    }
    return false;
  }

  // For UpToSignChange: the matched labels agree in absolute value; check
  // that the sign discrepancies are realizable by vertex and edge sign
  // changes, i.e. that eps(origin(h)) * eta(pair(h)) = r(h) is solvable,
  // which reduces to the pair constraint eps(x)*eps(y) = r(h)*r(hbar).
  bool signConsistent() const {
    if (mode == IsoMode::Exact) return true;
    std::map<VertexId, int> eps;
    // BFS over g1's vertices through its pairs.
    for (const auto& start : g1.vertices()) {
      if (eps.count(start)) continue;
      eps[start] = 1;
      std::deque<VertexId> queue{start};
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (const auto& h : g1.halfEdgesAt(x)) {
          const HalfEdgeId hb = reverseHalf(h);
          const int rh = signInt(g2.label(hmap.at(h))) * signInt(g1.label(h));
          const int rb = signInt(g2.label(hmap.at(hb))) * signInt(g1.label(hb));
          const VertexId y = g1.origin(hb);
          const int needed = eps.at(x) * rh * rb;
          auto it = eps.find(y);
          if (it == eps.end()) {
            eps[y] = needed;
            queue.push_back(y);
          } else if (it->second != needed) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

}  // namespace

bool isomorphic(const LabeledGraph& g1, const LabeledGraph& g2, IsoMode mode) {
  checkGuard(g1.vertexCount() <= 12 && g2.vertexCount() <= 12 && g1.pairCount() <= 24 &&
                 g2.pairCount() <= 24,
             "isomorphic: refusing graphs beyond 12 vertices / 24 edge pairs");
  if (g1.vertexCount() != g2.vertexCount() || g1.pairCount() != g2.pairCount()) return false;
  const bool absolute = (mode == IsoMode::UpToSignChange);
  // Global signature screen: the sorted multiset of vertex signatures must agree.
  std::multiset<VertexSignature> s1, s2;
  for (const auto& v : g1.vertices()) s1.insert(signatureOf(g1, v, absolute));
  for (const auto& v : g2.vertices()) s2.insert(signatureOf(g2, v, absolute));
  if (s1 != s2) return false;
  if (g1.pairCount() == 0) return true;

  IsoSearch search{g1, g2, mode, g1.pairIds(), {}, {}, {}, {}};
  return search.tryPair(0);
}

}  // namespace gbs
