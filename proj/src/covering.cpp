#include "gbs/covering.hpp"

#include <algorithm>

namespace gbs {

HalfEdgeId BranchedCovering::halfImage(const HalfEdgeId& h) const {
  const HalfEdgeId pid = pairIdOf(h);
  auto it = edgeMap.find(pid);
  if (it == edgeMap.end()) throw GraphError("covering: no image for edge " + pid);
  return isReverseHalf(h) ? reverseHalf(it->second) : it->second;
}

const Integer& BranchedCovering::degreeOf(const std::string& id) const {
  auto it = degree.find(id);
  if (it == degree.end()) throw GraphError("covering: no degree for " + id);
  return it->second;
}

std::vector<std::string> validateCovering(const BranchedCovering& c) {
  std::vector<std::string> issues;
  auto complain = [&issues](const std::string& s) { issues.push_back(s); };

  for (const auto& is : c.source.validate()) complain("source: " + is);
  for (const auto& is : c.target.validate()) complain("target: " + is);

  // Map domains and ranges.
  for (const auto& v : c.source.vertices()) {
    auto it = c.vertexMap.find(v);
    if (it == c.vertexMap.end())
      complain("vertexMap: no image for source vertex " + v);
    else if (!c.target.hasVertex(it->second))
      complain("vertexMap: image of " + v + " is not a target vertex: " + it->second);
  }
  for (const auto& [v, img] : c.vertexMap)
    if (!c.source.hasVertex(v)) complain("vertexMap: unknown source vertex " + v);
  for (const auto& pid : c.source.pairIds()) {
    auto it = c.edgeMap.find(pid);
    if (it == c.edgeMap.end())
      complain("edgeMap: no image for source edge " + pid);
    else if (!c.target.hasHalf(it->second))
      complain("edgeMap: image of " + pid + " is not a target half-edge: " + it->second);
  }
  for (const auto& [pid, img] : c.edgeMap)
    if (!c.source.hasPair(pid)) complain("edgeMap: unknown source edge " + pid);

  // Degrees: present and positive for all source vertices and pairs.
  for (const auto& v : c.source.vertices()) {
    auto it = c.degree.find(v);
    if (it == c.degree.end())
      complain("degree: missing for vertex " + v);
    else if (it->second <= 0)
      complain("degree: non-positive for vertex " + v);
  }
  for (const auto& pid : c.source.pairIds()) {
    auto it = c.degree.find(pid);
    if (it == c.degree.end())
      complain("degree: missing for edge " + pid);
    else if (it->second <= 0)
      complain("degree: non-positive for edge " + pid);
  }
  if (!issues.empty()) return issues;  // structural problems mask the rest

  // Morphism property: origins commute with the maps.
  for (const auto& h : c.source.halfEdgeIds()) {
    const HalfEdgeId img = c.halfImage(h);
    if (c.vertexMap.at(c.source.origin(h)) != c.target.origin(img))
      complain("morphism: origin of " + h + " maps to " + c.vertexMap.at(c.source.origin(h)) +
               " but its image half-edge " + img + " originates at " + c.target.origin(img));
  }

  // Admissibility at every source vertex over every target half-edge.
  for (const auto& u : c.source.vertices()) {
    const VertexId v = c.vertexMap.at(u);
    const Integer du = c.degreeOf(u);
    for (const auto& e : c.target.halfEdgesAt(v)) {
      const Integer mu = c.target.label(e);
      const Integer k = gcdInt(du, mu);
      std::vector<HalfEdgeId> fiber;
      for (const auto& h : c.source.halfEdgesAt(u))
        if (c.halfImage(h) == e) fiber.push_back(h);
      if (Integer(fiber.size()) != k) {
        complain("admissibility(1): vertex " + u + " over half-edge " + e + ": expected " +
                 toString(k) + " preimage half-edges, found " + std::to_string(fiber.size()));
        continue;
      }
      for (const auto& h : fiber) {
        if (c.source.label(h) * k != mu)
          complain("admissibility(2): half-edge " + h + " over " + e + " has label " +
                   toString(c.source.label(h)) + ", expected " + toString(mu) + "/" + toString(k));
        if (c.degreeOf(pairIdOf(h)) * k != du)
          complain("admissibility(3): edge " + pairIdOf(h) + " over " + e + " has degree " +
                   toString(c.degreeOf(pairIdOf(h))) + ", expected " + toString(du) + "/" +
                   toString(k));
      }
    }
  }
  return issues;
}

Integer coveringIndex(const BranchedCovering& c) {
  const auto issues = validateCovering(c);
  if (!issues.empty()) throw GraphError("coveringIndex: covering is not admissible: " + issues.front());
  std::map<VertexId, Integer> fiberSum;
  for (const auto& u : c.source.vertices()) fiberSum[c.vertexMap.at(u)] += c.degreeOf(u);
  Integer index = 0;
  for (const auto& v : c.target.vertices()) {
    auto it = fiberSum.find(v);
    const Integer sum = (it == fiberSum.end()) ? Integer(0) : it->second;
    if (index == 0)
      index = sum;
    else if (sum != index)
      throw GraphError("coveringIndex: fiber sums disagree: vertex " + v + " has " + toString(sum) +
                       ", expected " + toString(index));
  }
  if (index <= 0) throw GraphError("coveringIndex: empty or degenerate fiber");
  return index;
}

BranchedCovering composeCoverings(const BranchedCovering& outer, const BranchedCovering& inner) {
  if (!(inner.target == outer.source))
    throw GraphError("composeCoverings: inner target differs from outer source");
  BranchedCovering out;
  out.source = inner.source;
  out.target = outer.target;
  for (const auto& [u, v] : inner.vertexMap) out.vertexMap[u] = outer.vertexMap.at(v);
  for (const auto& pid : inner.source.pairIds())
    out.edgeMap[pid] = outer.halfImage(inner.halfImage(pid));
  for (const auto& u : inner.source.vertices())
    out.degree[u] = inner.degreeOf(u) * outer.degreeOf(inner.vertexMap.at(u));
  for (const auto& pid : inner.source.pairIds())
    out.degree[pid] = inner.degreeOf(pid) * outer.degreeOf(pairIdOf(inner.halfImage(pid)));
  return out;
}

BranchedCovering identityCovering(const LabeledGraph& g) {
  BranchedCovering c;
  c.source = g;
  c.target = g;
  for (const auto& v : g.vertices()) {
    c.vertexMap[v] = v;
    c.degree[v] = 1;
  }
  for (const auto& pid : g.pairIds()) {
    c.edgeMap[pid] = pid;
    c.degree[pid] = 1;
  }
  return c;
}

}  // namespace gbs
