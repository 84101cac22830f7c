#include "gbs/profiles.hpp"

#include <algorithm>
#include <map>

namespace gbs {

std::string toString(const RatioCycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.ratios.size(); ++i) {
    if (i) out += ",";
    out += toString(c.ratios[i]);
  }
  return out + ")";
}

RatioCycle tailRatioCycle(const SymbolicProfile& p) {
  const SymbolicProfile c = canonicalizeProfile(p);
  // Ratios of one period of the canonical tail, anchored in the window just
  // beyond the head and the scales.
  Integer M = 1;
  for (const auto& h : c.head) M = std::max(M, h);
  for (const auto& s : c.tailScales) M = std::max(M, s);
  std::vector<Integer> w;
  for (const auto& s : c.tailScales) {
    Integer x = s;
    while (x <= M) x *= c.ratio;
    w.push_back(x);
  }
  std::sort(w.begin(), w.end());
  std::vector<Integer> rho;
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    rho.push_back(divExact(w[t + 1], w[t], "tailRatioCycle"));
  rho.push_back(divExact(w.front() * c.ratio, w.back(), "tailRatioCycle"));
  // Canonicalization already made the cycle primitive; pick the least rotation.
  std::vector<Integer> best = rho;
  for (std::size_t s = 1; s < rho.size(); ++s) {
    std::vector<Integer> rot;
    rot.reserve(rho.size());
    for (std::size_t t = 0; t < rho.size(); ++t) rot.push_back(rho[(s + t) % rho.size()]);
    if (rot < best) best = rot;
  }
  return RatioCycle{best};
}

namespace {

std::string profileKey(const SymbolicProfile& c) {
  std::string key = "Q" + toString(c.ratio) + "|H";
  for (const auto& h : c.head) key += toString(h) + ",";
  key += "|C";
  for (const auto& s : c.tailScales) key += toString(s) + ",";
  return key;
}

// Canonical forms of S/r for r = 1..bound, keyed for equality testing; each
// key keeps the least r producing it.
std::map<std::string, Integer> rescaleOrbit(const SymbolicProfile& p, const Integer& bound) {
  std::map<std::string, Integer> orbit;
  for (Integer r = 1; r <= bound; ++r) {
    const std::string key = profileKey(rescaleProfile(p, r));
    orbit.emplace(key, r);  // emplace keeps the first (least) r
  }
  return orbit;
}

}  // namespace

CompareResult compareProfiles(const SymbolicProfile& p1, const SymbolicProfile& p2,
                              const Integer& bound) {
  if (bound < 1) throw GraphError("compareProfiles: bound must be positive");
  CompareResult out;
  const RatioCycle c1 = tailRatioCycle(p1);
  const RatioCycle c2 = tailRatioCycle(p2);
  if (!(c1 == c2)) {
    out.verdict = CompareVerdict::Inequivalent;
    out.reason = "tail ratio cycles differ: " + toString(c1) + " vs " + toString(c2);
    return out;
  }
  const auto orbit1 = rescaleOrbit(p1, bound);
  const auto orbit2 = rescaleOrbit(p2, bound);
  // Lexicographically least witness: smallest r whose form also arises from
  // p2, then the smallest r' producing that form.
  std::optional<std::pair<Integer, Integer>> best;
  for (const auto& [key, r] : orbit1) {
    auto it = orbit2.find(key);
    if (it == orbit2.end()) continue;
    if (!best || r < best->first || (r == best->first && it->second < best->second))
      best = {r, it->second};
  }
  if (best) {
    out.verdict = CompareVerdict::Equivalent;
    out.witness = best;
    out.reason = "rescaling by (" + toString(best->first) + ", " + toString(best->second) +
                 ") gives equal profiles";
    return out;
  }
  out.verdict = CompareVerdict::Unknown;
  out.reason = "tail ratio cycles agree (" + toString(c1) + ") but no witness pair within bound " +
               toString(bound);
  return out;
}

TruncatedWitnessResult equivalentTruncated(const TruncatedProfile& s1, const TruncatedProfile& s2,
                                           const Integer& bound) {
  if (bound < 1) throw GraphError("equivalentTruncated: bound must be positive");
  checkGuard(bound <= 1000, "equivalentTruncated: refusing witness bound beyond 1000");
  if (s1.values.empty() || s2.values.empty())
    throw GraphError("equivalentTruncated: empty profile");
  TruncatedWitnessResult out;
  for (Integer r = 1; r <= bound && !out.witness; ++r) {
    const TruncatedProfile t1 = rescaleProfile(s1, r);
    for (Integer rp = 1; rp <= bound && !out.witness; ++rp) {
      const TruncatedProfile t2 = rescaleProfile(s2, rp);
      const Integer cut = std::min(*t1.values.rbegin(), *t2.values.rbegin());
      std::set<Integer> a, b;
      for (const auto& v : t1.values)
        if (v <= cut) a.insert(v);
      for (const auto& v : t2.values)
        if (v <= cut) b.insert(v);
      if (a == b) out.witness = {r, rp};
    }
  }
  return out;
}

}  // namespace gbs
