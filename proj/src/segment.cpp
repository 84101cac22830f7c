#include "gbs/segment.hpp"

namespace gbs {

namespace {
void checkEntries(const IndexSequence& seq) {
  for (const auto& [n, m] : seq)
    if (n == 0 || m == 0) throw GraphError("segment index: zero entry in index sequence");
}
}  // namespace

Integer segmentIndex(const IndexSequence& seq) {
  checkEntries(seq);
  Integer r = 1;
  Integer prefixN = 1;  // N_l
  Integer prefixM = 1;  // M_{l-1} while processing step l
  for (const auto& [n, m] : seq) {
    prefixN *= absInt(n);
    r = lcmInt(r, divExact(prefixN, gcdInt(prefixN, prefixM), "segmentIndex"));
    prefixM *= absInt(m);
  }
  return r;
}

Integer reverseIndex(const IndexSequence& seq) {
  IndexSequence rev;
  rev.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) rev.emplace_back(it->second, it->first);
  return segmentIndex(rev);
}

bool fixesSegment(const IndexSequence& seq) {
  checkEntries(seq);
  Integer tailN = 1;    // prod_{i=2..l} n_i
  Integer prefixM = 1;  // prod_{i=1..l-1} m_i
  for (std::size_t l = 1; l < seq.size(); ++l) {
    tailN *= absInt(seq[l].first);
    prefixM *= absInt(seq[l - 1].second);
    if (!divides(tailN, prefixM)) return false;
  }
  return true;
}

IndexPair extendIndexPair(const IndexPair& idxAndReverse, const Integer& n, const Integer& m) {
  const Integer A = idxAndReverse.first;   // segment index so far
  const Integer B = idxAndReverse.second;  // reverse index so far
  const Integer na = absInt(n), ma = absInt(m);
  if (na == 0 || ma == 0) throw GraphError("extendIndexPair: zero entry");
  const Integer An = A * na;
  const Integer idx = lcmInt(A, divExact(An, gcdInt(An, B), "extendIndexPair"));
  const Integer mB = ma * B;
  const Integer ridx = lcmInt(ma, divExact(mB, gcdInt(mB, na), "extendIndexPair"));
  return {idx, ridx};
}

IndexSequence pathIndexSequence(const LabeledGraph& g, const EdgePath& path) {
  checkPath(g, path);
  IndexSequence seq;
  seq.reserve(path.size());
  for (const auto& h : path) seq.emplace_back(absInt(g.label(h)), absInt(g.label(reverseHalf(h))));
  return seq;
}

}  // namespace gbs
