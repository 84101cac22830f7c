#include "gbs/graph.hpp"

#include <cstdlib>
#include <deque>

namespace gbs {

void LabeledGraph::addVertex(const VertexId& v) {
  if (v.empty()) throw GraphError("addVertex: empty vertex id");
  if (!vertices_.insert(v).second) throw GraphError("addVertex: duplicate vertex id: " + v);
}

void LabeledGraph::addEdge(const HalfEdgeId& pid, const VertexId& from, const VertexId& to,
                           const Integer& labelAtFrom, const Integer& labelAtTo) {
  if (pid.empty()) throw GraphError("addEdge: empty edge id");
  if (isReverseHalf(pid)) throw GraphError("addEdge: edge id must not start with '~': " + pid);
  if (halves_.count(pid)) throw GraphError("addEdge: duplicate edge id: " + pid);
  if (!hasVertex(from)) throw GraphError("addEdge: unknown vertex: " + from);
  if (!hasVertex(to)) throw GraphError("addEdge: unknown vertex: " + to);
  if (labelAtFrom == 0 || labelAtTo == 0) throw GraphError("addEdge: labels must be nonzero: " + pid);
  halves_.emplace(pid, Half{from, labelAtFrom});
  halves_.emplace(reverseHalf(pid), Half{to, labelAtTo});
}

void LabeledGraph::removeEdge(const HalfEdgeId& pid) {
  if (!hasPair(pid)) throw GraphError("removeEdge: unknown edge id: " + pid);
  halves_.erase(pid);
  halves_.erase(reverseHalf(pid));
}

void LabeledGraph::removeVertex(const VertexId& v) {
  if (!hasVertex(v)) throw GraphError("removeVertex: unknown vertex: " + v);
  for (const auto& [h, half] : halves_)
    if (half.origin == v) throw GraphError("removeVertex: vertex not isolated: " + v);
  vertices_.erase(v);
}

void LabeledGraph::setLabel(const HalfEdgeId& h, const Integer& v) {
  if (v == 0) throw GraphError("setLabel: labels must be nonzero: " + h);
  auto it = halves_.find(h);
  if (it == halves_.end()) throw GraphError("setLabel: unknown half-edge id: " + h);
  it->second.label = v;
}

std::vector<HalfEdgeId> LabeledGraph::halfEdgeIds() const {
  std::vector<HalfEdgeId> out;
  out.reserve(halves_.size());
  for (const auto& [h, half] : halves_) out.push_back(h);
  return out;  // map iteration order is already sorted
}

std::vector<HalfEdgeId> LabeledGraph::pairIds() const {
  std::vector<HalfEdgeId> out;
  for (const auto& [h, half] : halves_)
    if (!isReverseHalf(h)) out.push_back(h);
  return out;
}

std::vector<HalfEdgeId> LabeledGraph::halfEdgesAt(const VertexId& v) const {
  if (!hasVertex(v)) throw GraphError("halfEdgesAt: unknown vertex: " + v);
  std::vector<HalfEdgeId> out;
  for (const auto& [h, half] : halves_)
    if (half.origin == v) out.push_back(h);
  return out;
}

std::size_t LabeledGraph::pairCount() const { return halves_.size() / 2; }

bool LabeledGraph::connected() const {
  if (vertices_.empty()) return true;
  std::set<VertexId> seen;
  std::deque<VertexId> queue{*vertices_.begin()};
  seen.insert(*vertices_.begin());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [h, half] : halves_) {
      if (half.origin != v) continue;
      const VertexId& w = terminus(h);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == vertices_.size();
}

std::vector<std::string> LabeledGraph::validate() const {
  std::vector<std::string> issues;
  if (vertices_.empty()) issues.push_back("graph has no vertices");
  for (const auto& [h, half] : halves_) {
    if (!halves_.count(reverseHalf(h)))
      issues.push_back("half-edge without reverse: " + h);
    if (!vertices_.count(half.origin))
      issues.push_back("half-edge " + h + " originates at unknown vertex " + half.origin);
    if (half.label == 0) issues.push_back("half-edge " + h + " has zero label");
  }
  if (!vertices_.empty() && !connected()) issues.push_back("graph is not connected");
  return issues;
}

void DirectedStructure::markPlus(const HalfEdgeId& h) { plus_.insert(h); }

std::vector<std::string> DirectedStructure::validateAgainst(const LabeledGraph& g) const {
  std::vector<std::string> issues;
  for (const auto& h : plus_) {
    if (!g.hasHalf(h)) {
      issues.push_back("plus half-edge not in graph: " + h);
      continue;
    }
    if (plus_.count(reverseHalf(h)))
      issues.push_back("both halves of edge " + pairIdOf(h) + " marked plus");
  }
  for (const auto& pid : g.pairIds())
    if (!plus_.count(pid) && !plus_.count(reverseHalf(pid)))
      issues.push_back("edge " + pid + " has no plus half");
  return issues;
}

void checkPath(const LabeledGraph& g, const EdgePath& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.hasHalf(path[i])) throw GraphError("path uses unknown half-edge: " + path[i]);
    if (i > 0 && g.terminus(path[i - 1]) != g.origin(path[i]))
      throw GraphError("path is not composable at step " + std::to_string(i) + " (" + path[i] + ")");
  }
}

bool isClosedPath(const LabeledGraph& g, const EdgePath& path) {
  checkPath(g, path);
  if (path.empty()) return true;
  return g.terminus(path.back()) == g.origin(path.front());
}

bool guardOverrideActive() {
  const char* v = std::getenv("GBS_GUARD_OVERRIDE");
  return v != nullptr && std::string(v) == "1";
}

void checkGuard(bool withinGuard, const std::string& message) {
  if (!withinGuard && !guardOverrideActive())
    throw GraphError(message + " (set GBS_GUARD_OVERRIDE=1 to lift this guard)");
}

}  // namespace gbs
