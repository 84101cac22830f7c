#include "gbs/depth.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gbs/moves.hpp"

namespace gbs {

bool certifyNonElementary(const LabeledGraph& g) {
  const LabeledGraph r = reduce(g).graph;
  const auto pairs = r.pairIds();
  if (pairs.size() >= 2) return true;
  if (pairs.empty()) return false;  // a point: the group is Z
  const HalfEdgeId p = pairs.front();
  const Integer a = absInt(r.label(p));
  const Integer b = absInt(r.label(reverseHalf(p)));
  if (r.isLoop(p)) return a >= 2 || b >= 2;  // unit loops give Z^2 / Klein bottle
  return !(a == 2 && b == 2);  // the (2,2) segment is the Klein bottle group
}

// ------------------------------------------------------------------------
// Truncated profiles

namespace {

struct EnumState {
  VertexId vertex;
  HalfEdgeId last;  // empty at the start
  Integer idx, ridx;
  Rational modulus;
};

// Dominance key: vertex, incoming half-edge, and the prefix invariants.
using StateKey = std::tuple<VertexId, HalfEdgeId, Integer, Integer, Rational>;

}  // namespace

TruncatedProfile truncatedProfile(const LabeledGraph& g, const VertexId& base, int maxLen) {
  if (!g.hasVertex(base)) throw GraphError("truncatedProfile: unknown base vertex: " + base);
  if (maxLen < 0) throw GraphError("truncatedProfile: negative length bound");
  checkGuard(maxLen <= 12, "truncatedProfile: refusing length bound beyond 12");
  if (!certifyNonElementary(g))
    throw GraphError("truncatedProfile: graph is not certified non-elementary");

  TruncatedProfile out;
  out.lengthBound = maxLen;
  out.values.insert(1);  // the empty path

  // Iterative deepening is unnecessary: plain DFS with dominance pruning.
  // Two partial paths ending at the same vertex with the same incoming
  // half-edge and the same (index, reverse index, modulus) admit exactly the
  // same extensions, so only the shortest needs exploring.
  std::map<StateKey, int> bestSteps;
  struct Frame {
    EnumState st;
    int steps;
  };
  std::vector<Frame> stack;
  stack.push_back({{base, "", 1, 1, 1}, 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.steps >= maxLen) continue;
    for (const auto& h : g.halfEdgesAt(f.st.vertex)) {
      if (!f.st.last.empty() && h == reverseHalf(f.st.last) && absInt(g.label(h)) < 2)
        continue;  // immediate backtracking across a unit end is a fake step
      const Integer& lf = g.label(h);
      const Integer& lb = g.label(reverseHalf(h));
      EnumState next;
      next.vertex = g.terminus(h);
      next.last = h;
      const IndexPair ext = extendIndexPair({f.st.idx, f.st.ridx}, lf, lb);
      next.idx = ext.first;
      next.ridx = ext.second;
      next.modulus = f.st.modulus * Rational(lf) / Rational(lb);
      const int steps = f.steps + 1;
      if (next.vertex == base && boost::multiprecision::abs(next.modulus) == 1)
        out.values.insert(next.idx);
      StateKey key{next.vertex, next.last, next.idx, next.ridx, next.modulus};
      auto it = bestSteps.find(key);
      if (it != bestSteps.end() && it->second <= steps) continue;
      bestSteps[key] = steps;
      stack.push_back({next, steps});
    }
  }
  return out;
}

// ------------------------------------------------------------------------
// Symbolic profiles

SymbolicProfile wedgeProfile(const Integer& N, const std::vector<Integer>& divisors) {
  if (N < 2) throw GraphError("wedgeProfile: ratio must be at least 2, got " + toString(N));
  if (divisors.empty()) throw GraphError("wedgeProfile: divisor list is empty");
  std::set<Integer> ds(divisors.begin(), divisors.end());
  if (!ds.count(1)) throw GraphError("wedgeProfile: 1 must be among the divisors");
  for (const auto& d : ds) {
    if (d <= 0) throw GraphError("wedgeProfile: divisors must be positive");
    if (!divides(d, N))
      throw GraphError("wedgeProfile: " + toString(d) + " does not divide " + toString(N));
  }
  // lcm-closure of the divisor set together with N itself.
  std::set<Integer> closure = ds;
  closure.insert(N);
  for (const auto& a : closure)
    for (const auto& b : closure)
      if (!closure.count(lcmInt(a, b)))
        throw GraphError("wedgeProfile: divisor set not closed under lcm: lcm(" + toString(a) +
                         ", " + toString(b) + ") is missing");
  SymbolicProfile p;
  p.head = {};
  p.tailScales.assign(ds.begin(), ds.end());
  p.ratio = N;
  return p;
}

std::vector<std::string> checkSymbolicProfile(const SymbolicProfile& p) {
  std::vector<std::string> issues;
  if (p.ratio < 2) issues.push_back("ratio must be at least 2");
  if (p.tailScales.empty()) issues.push_back("profile needs at least one tail scale");
  auto checkSorted = [&issues](const std::vector<Integer>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] <= 0) issues.push_back(std::string(what) + ": entries must be positive");
      if (i > 0 && v[i] <= v[i - 1])
        issues.push_back(std::string(what) + ": entries must be strictly increasing");
    }
  };
  checkSorted(p.head, "head");
  checkSorted(p.tailScales, "tailScales");
  if (!issues.empty()) return issues;
  // Divisibility chain: enumerate elements through one full period beyond
  // everything (head and scales); periodicity extends the check to the rest.
  Integer maxE = p.ratio;
  for (const auto& h : p.head) maxE = std::max(maxE, h);
  for (const auto& c : p.tailScales) maxE = std::max(maxE, c);
  const auto elems = symbolicValuesUpTo(p, maxE * p.ratio * p.ratio);
  const std::vector<Integer> sorted(elems.begin(), elems.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!divides(sorted[i - 1], sorted[i]))
      issues.push_back("divisibility chain broken: " + toString(sorted[i - 1]) +
                       " does not divide " + toString(sorted[i]));
  return issues;
}

std::set<Integer> symbolicValuesUpTo(const SymbolicProfile& p, const Integer& bound) {
  std::set<Integer> out;
  for (const auto& h : p.head)
    if (h <= bound) out.insert(h);
  for (const auto& c : p.tailScales)
    for (Integer x = c; x <= bound; x *= p.ratio) out.insert(x);
  return out;
}

namespace {

// Is x of the form c * Q^j for some j >= 0?
bool inFamily(const Integer& x, const Integer& c, const Integer& Q) {
  Integer v = c;
  while (v < x) v *= Q;
  return v == x;
}

struct ProfileParts {
  std::set<Integer> head;
  std::set<Integer> scales;
  Integer ratio;
};

// Absorption and downward extension to a fixpoint; assumes positive entries.
void absorb(ProfileParts& parts) {
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop scales lying in another scale's family.
    for (auto it = parts.scales.begin(); it != parts.scales.end();) {
      bool redundant = false;
      for (const auto& c : parts.scales)
        if (c < *it && inFamily(*it, c, parts.ratio)) redundant = true;
      if (redundant) {
        it = parts.scales.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    // Drop head elements lying in some family.
    for (auto it = parts.head.begin(); it != parts.head.end();) {
      bool covered = false;
      for (const auto& c : parts.scales)
        if (inFamily(*it, c, parts.ratio)) covered = true;
      if (covered) {
        it = parts.head.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    // Extend families downward through the head.
    for (auto it = parts.scales.begin(); it != parts.scales.end();) {
      Integer c = *it;
      bool moved = false;
      while (c % parts.ratio == 0 && parts.head.count(c / parts.ratio)) {
        c /= parts.ratio;
        parts.head.erase(c);
        moved = true;
      }
      if (moved) {
        it = parts.scales.erase(it);
        parts.scales.insert(c);
        it = parts.scales.begin();  // restart: the set changed under us
        changed = true;
      } else {
        ++it;
      }
    }
  }
}

// One representative per family in the window (M, M*ratio].
std::vector<Integer> windowElements(const ProfileParts& parts, const Integer& M) {
  std::vector<Integer> w;
  for (const auto& c : parts.scales) {
    Integer x = c;
    while (x <= M) x *= parts.ratio;
    w.push_back(x);
  }
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

SymbolicProfile canonicalizeProfile(const SymbolicProfile& p) {
  {
    const auto issues = checkSymbolicProfile(p);
    if (!issues.empty()) throw GraphError("canonicalizeProfile: " + issues.front());
  }
  ProfileParts parts{{p.head.begin(), p.head.end()},
                     {p.tailScales.begin(), p.tailScales.end()},
                     p.ratio};
  for (;;) {
    absorb(parts);
    // Ratio word of one period beyond everything.
    Integer M = 1;
    for (const auto& h : parts.head) M = std::max(M, h);
    for (const auto& c : parts.scales) M = std::max(M, c);
    const auto w = windowElements(parts, M);
    const std::size_t period = w.size();
    std::vector<Integer> rho;
    for (std::size_t t = 0; t + 1 < period; ++t)
      rho.push_back(divExact(w[t + 1], w[t], "canonicalizeProfile"));
    rho.push_back(divExact(w.front() * parts.ratio, w.back(), "canonicalizeProfile"));
    // Smallest divisor d of the period with d-periodic ratio word.
    std::size_t d = period;
    for (std::size_t cand = 1; cand < period; ++cand) {
      if (period % cand != 0) continue;
      bool periodic = true;
      for (std::size_t t = 0; t < period && periodic; ++t)
        if (rho[t] != rho[(t + cand) % period]) periodic = false;
      if (periodic) {
        d = cand;
        break;
      }
    }
    if (d == period) break;
    // Regroup: the set beyond M is generated by the first d window elements
    // under the primitive ratio; everything at or below M becomes head.
    Integer primitive = 1;
    for (std::size_t t = 0; t < d; ++t) primitive *= rho[t];
    ProfileParts finer;
    finer.ratio = primitive;
    for (const auto& h : parts.head) finer.head.insert(h);
    for (const auto& c : parts.scales)
      for (Integer x = c; x <= M; x *= parts.ratio) finer.head.insert(x);
    for (std::size_t t = 0; t < d; ++t) finer.scales.insert(w[t]);
    parts = finer;
  }
  SymbolicProfile out;
  out.head.assign(parts.head.begin(), parts.head.end());
  out.tailScales.assign(parts.scales.begin(), parts.scales.end());
  out.ratio = parts.ratio;
  return out;
}

TruncatedProfile rescaleProfile(const TruncatedProfile& p, const Integer& r) {
  if (r < 1) throw GraphError("rescaleProfile: r must be a positive integer");
  TruncatedProfile out;
  out.lengthBound = p.lengthBound;
  for (const auto& t : p.values) out.values.insert(divExact(t, gcdInt(t, r), "rescaleProfile"));
  return out;
}

SymbolicProfile rescaleProfile(const SymbolicProfile& p, const Integer& r) {
  if (r < 1) throw GraphError("rescaleProfile: r must be a positive integer");
  {
    const auto issues = checkSymbolicProfile(p);
    if (!issues.empty()) throw GraphError("rescaleProfile: " + issues.front());
  }
  std::set<Integer> head;
  std::set<Integer> scales;
  for (const auto& h : p.head) head.insert(h / gcdInt(h, r));
  for (const auto& c : p.tailScales) {
    // gcd(r, c*Q^t) is nondecreasing and stabilizes; once stable it stays
    // stable, the tail rescales to a genuine geometric family again, and the
    // finitely many earlier elements fall into the head.
    Integer x = c;
    Integer g = gcdInt(r, x);
    while (gcdInt(r, x * p.ratio) != g) {
      head.insert(x / g);
      x *= p.ratio;
      g = gcdInt(r, x);
    }
    scales.insert(x / g);
  }
  SymbolicProfile raw;
  raw.head.assign(head.begin(), head.end());
  raw.tailScales.assign(scales.begin(), scales.end());
  raw.ratio = p.ratio;
  // The raw head may now intersect the families; canonicalization cleans up.
  return canonicalizeProfile(raw);
}

}  // namespace gbs
