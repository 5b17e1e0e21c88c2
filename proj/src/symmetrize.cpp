#include "loops/symmetrize.hpp"

#include <algorithm>
#include <set>

#include "loops/error.hpp"
#include "loops/structure.hpp"

namespace loops {

long long muOf(const CanonicalTable& t) {
  int n = t.order();
  long long mu = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (t.at(a, t.at(b, c)) != t.at(t.at(a, b), c)) ++mu;
  return mu;
}

long long muOf(const Quasigroup& q) { return muOf(q.table()); }

BlockStructure makeBlockStructure(const Quasigroup& l, const Quasigroup& s, int h) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "block structure");
  int n = l.order();
  if (h < 1 || h > n) fail(Errc::PreconditionFailed, "h outside the loop");
  if (h == 1 || l.mul(h, h) != 1)
    fail(Errc::PreconditionFailed, "h is not an involution");
  std::vector<int> center = centralParts(l, CentralKind::center);
  if (std::find(center.begin(), center.end(), h) == center.end())
    fail(Errc::PreconditionFailed, "h is not central");
  bool hInS = false;
  for (int p : s.posInParent())
    if (l.relativePosOf(p) == h) hInS = true;
  if (!hInS) fail(Errc::PreconditionFailed, "h does not lie in the subloop");

  Cosets cs = rightCosets(l, s);  // throws CosetsDoNotPartition when they overlap
  BlockStructure b;
  b.numBlocks = static_cast<int>(cs.cosets.size());
  b.blocks = cs.cosets;
  b.blockOf.assign(n + 1, 0);
  for (int c = 0; c < b.numBlocks; ++c)
    for (int x : cs.cosets[c]) b.blockOf[x] = c + 1;
  b.h = h;
  b.hTranslate.assign(n + 1, 0);
  for (int x = 1; x <= n; ++x) b.hTranslate[x] = l.mul(h, x);
  return b;
}

CanonicalTable blockFlip(const CanonicalTable& t, const BlockStructure& b, int i, int j) {
  if (i == j) fail(Errc::EqualBlocks, "flip needs two distinct blocks");
  if (i < 1 || j < 1 || i > b.numBlocks || j > b.numBlocks)
    fail(Errc::PreconditionFailed, "block index out of range");
  CanonicalTable out = t;
  int n = t.order();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      int br = b.blockOf[r], bc = b.blockOf[c];
      if ((br == i && bc == j) || (br == j && bc == i))
        out.set(r, c, b.hTranslate[t.at(r, c)]);
    }
  return out;
}

GreedyResult greedySymmetrize(const Quasigroup& l, const Quasigroup& s, int h) {
  BlockStructure b = makeBlockStructure(l, s, h);
  CanonicalTable t = l.table();
  long long mu = muOf(t);
  GreedyResult out;
  int step = 0;
  for (;;) {
    long long bestMu = mu;
    int bestI = 0, bestJ = 0;
    for (int i = 2; i <= b.numBlocks; ++i)
      for (int j = i + 1; j <= b.numBlocks; ++j) {
        long long cand = muOf(blockFlip(t, b, i, j));
        if (cand < bestMu) {
          bestMu = cand;
          bestI = i;
          bestJ = j;
        }
      }
    if (bestI == 0) break;
    t = blockFlip(t, b, bestI, bestJ);
    mu = bestMu;
    ++step;
    out.trace.push_back({bestI, bestJ, mu});
    if (!t.isLatin() || !t.isNormalized())
      fail(Errc::PreconditionFailed, "flip produced an invalid table");
  }
  out.loop = makeQuasigroup(std::move(t), Kind::loop);
  out.mu = mu;
  return out;
}

std::string traceToText(const GreedyResult& r) {
  std::string out;
  int k = 0;
  for (const auto& st : r.trace) {
    ++k;
    out += "step " + std::to_string(k) + ": flip (" + std::to_string(st.i) + "," +
           std::to_string(st.j) + "), mu=" + std::to_string(st.mu) + "\n";
  }
  return out;
}

}  // namespace loops
