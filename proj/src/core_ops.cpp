#include <algorithm>
#include <numeric>
#include <set>

#include "loops/quasigroup.hpp"

namespace loops {

namespace {

// Closure of seed (relative positions of q) under mul, ldiv, rdiv.
std::vector<int> divisionClosure(const Quasigroup& q, std::vector<int> seed) {
  std::set<int> cl(seed.begin(), seed.end());
  std::vector<int> frontier(cl.begin(), cl.end());
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::vector<int> members(cl.begin(), cl.end());
    for (int y : members) {
      for (int z : {q.mul(x, y), q.mul(y, x), q.ldiv(x, y), q.ldiv(y, x), q.rdiv(x, y), q.rdiv(y, x)}) {
        if (cl.insert(z).second) frontier.push_back(z);
      }
    }
  }
  return {cl.begin(), cl.end()};
}

bool isAssociativeTable(const CanonicalTable& t) {
  int n = t.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      int xy = t.at(x, y);
      for (int z = 1; z <= n; ++z)
        if (t.at(xy, z) != t.at(x, t.at(y, z))) return false;
    }
  return true;
}

}  // namespace

Quasigroup makeQuasigroup(const RawTable& t, Kind kind) {
  if (kind == Kind::loop) {
    // normalized: first row and first column read x_1..x_n
    int n = t.order();
    for (int k = 0; k < n; ++k)
      if (t.rows[0][k] != t.symbols[k] || t.rows[k][0] != t.symbols[k])
        fail(Errc::NotNormalized, "loop table must have first row and column x_1..x_n");
  }
  return Quasigroup::fromTable(canonicalize(t), kind);
}

Quasigroup makeQuasigroup(CanonicalTable t, Kind kind) {
  return Quasigroup::fromTable(std::move(t), kind);
}

Permutation translation(const Quasigroup& q, Side side, int x) {
  if (x < 1 || x > q.order()) fail(Errc::ForeignElement, "translation by out-of-range position");
  std::vector<int> img(q.order());
  for (int y = 1; y <= q.order(); ++y) img[y - 1] = (side == Side::left) ? q.mul(x, y) : q.mul(y, x);
  return Permutation::fromImages(std::move(img));
}

std::vector<Permutation> section(const Quasigroup& q, Side side) {
  std::vector<Permutation> out;
  out.reserve(q.order());
  for (int x = 1; x <= q.order(); ++x) out.push_back(translation(q, side, x));
  return out;
}

Inverses inversesOf(const Quasigroup& l, int x) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "inverses are defined for loops");
  Inverses inv;
  inv.left = l.rdiv(1, x);   // z with z*x = 1
  inv.right = l.ldiv(x, 1);  // z with x*z = 1
  if (inv.left == inv.right) inv.twoSided = inv.left;
  return inv;
}

int associatorOf(const Quasigroup& l, int x, int y, int z) {
  int left = l.mul(l.mul(x, y), z);
  int right = l.mul(x, l.mul(y, z));
  return l.ldiv(right, left);  // (x(yz)) u = (xy)z
}

int commutatorOf(const Quasigroup& l, int x, int y) {
  return l.ldiv(l.mul(y, x), l.mul(x, y));  // (yx) v = xy
}

Quasigroup principalIsotope(const Quasigroup& q, int f, int g) {
  int n = q.order();
  CanonicalTable p(n, std::vector<int>(n * n));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) p.set(x, y, q.mul(q.rdiv(x, g), q.ldiv(f, y)));
  int e = q.mul(f, g);  // neutral of the isotope
  // renumber by the transposition (1, e) so the neutral lands at position 1
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  if (e != 1) std::swap(img[0], img[e - 1]);
  Permutation t = Permutation::fromImages(std::move(img));
  CanonicalTable out(n, std::vector<int>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.set(t(i), t(j), t(p.at(i, j)));
  return Quasigroup::fromTable(std::move(out), Kind::loop);
}

Quasigroup asLoop(const Quasigroup& q) {
  if (q.isLoop()) return q;
  int k = q.table().neutralPosition();
  if (k > 0) {
    std::vector<int> img(q.order());
    std::iota(img.begin(), img.end(), 1);
    if (k != 1) std::swap(img[0], img[k - 1]);
    Permutation t = Permutation::fromImages(std::move(img));
    int n = q.order();
    CanonicalTable out(n, std::vector<int>(n * n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.set(t(i), t(j), t(q.mul(i, j)));
    return Quasigroup::fromTable(std::move(out), Kind::loop);
  }
  return principalIsotope(q, 1, 1);
}

Quasigroup subquasigroup(const Quasigroup& q, const std::vector<int>& s, Kind kind) {
  if (kind == Kind::loop && !q.isLoop()) fail(Errc::LoopRequired, "subloop of a non-loop");
  if (s.empty()) fail(Errc::EmptyGeneratingSet, "subquasigroup of an empty set");
  std::vector<int> seed = s;
  if (kind == Kind::loop) seed.push_back(1);  // adjoin the neutral element
  for (int x : seed)
    if (x < 1 || x > q.order()) fail(Errc::ForeignElement, "generator position out of range");
  std::vector<int> closure = divisionClosure(q, std::move(seed));
  return makeSubobject(q.parent(), toRootPositions(q, closure), kind);
}

bool isSubquasigroup(const Quasigroup& q, const std::vector<int>& s) {
  std::set<int> set(s.begin(), s.end());
  for (int x : s)
    for (int y : s)
      if (!set.count(q.mul(x, y)) || !set.count(q.ldiv(x, y)) || !set.count(q.rdiv(x, y)))
        return false;
  return !s.empty();
}

std::vector<int> toRootPositions(const Quasigroup& q, const std::vector<int>& relative) {
  std::vector<int> out;
  out.reserve(relative.size());
  for (int r : relative) out.push_back(q.posInParent()[r - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quasigroup> allSubloops(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "allSubloops");
  std::set<std::vector<int>> known;  // relative position sets
  std::vector<std::vector<int>> frontier;
  std::vector<int> trivial = divisionClosure(l, {1});
  known.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<int> h = std::move(frontier.back());
    frontier.pop_back();
    std::set<int> hset(h.begin(), h.end());
    for (int x = 1; x <= l.order(); ++x) {
      if (hset.count(x)) continue;
      std::vector<int> seed = h;
      seed.push_back(x);
      std::vector<int> bigger = divisionClosure(l, std::move(seed));
      if (known.insert(bigger).second) frontier.push_back(bigger);
    }
  }
  std::vector<std::vector<int>> sorted(known.begin(), known.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Quasigroup> out;
  for (auto& pos : sorted) out.push_back(makeSubobject(l.parent(), toRootPositions(l, pos), Kind::loop));
  return out;
}

Cosets rightCosets(const Quasigroup& l, const Quasigroup& s) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "rightCosets");
  if (!l.sameFamily(s)) fail(Errc::NotASubloop, "subloop from a different family");
  std::vector<int> srel;
  for (int p : s.posInParent()) {
    int r = l.relativePosOf(p);
    if (r == 0) fail(Errc::NotASubloop, "subloop positions not contained in the loop");
    srel.push_back(r);
  }
  if (!isSubquasigroup(l, srel)) fail(Errc::NotASubloop, "set is not division-closed");
  Cosets out;
  std::vector<char> covered(l.order() + 1, 0);
  for (int x = 1; x <= l.order(); ++x) {
    if (covered[x]) continue;
    std::vector<int> coset;
    for (int e : srel) coset.push_back(l.mul(e, x));
    std::sort(coset.begin(), coset.end());
    for (int c : coset) {
      if (covered[c])
        fail(Errc::CosetsDoNotPartition, "right cosets overlap at position " + std::to_string(c));
      covered[c] = 1;
    }
    out.transversal.push_back(x);
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

Quasigroup isomorphicCopyByPerm(const Quasigroup& q, const Permutation& p) {
  if (p.degree() != q.order()) fail(Errc::DegreeMismatch, "permutation degree must equal the order");
  if (q.isLoop() && p(1) != 1) fail(Errc::IdentityMoved, "loop copies must fix position 1");
  int n = q.order();
  CanonicalTable out(n, std::vector<int>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.set(p(i), p(j), p(q.mul(i, j)));
  return Quasigroup::fromTable(std::move(out), q.isLoop() ? Kind::loop : Kind::quasigroup);
}

std::vector<int> generatorsSmallest(const Quasigroup& q) {
  std::vector<int> gens;
  std::set<int> closure;
  if (q.isLoop()) {
    auto triv = divisionClosure(q, {1});
    closure.insert(triv.begin(), triv.end());
  }
  while (static_cast<int>(closure.size()) < q.order()) {
    int x = 0;
    for (int p = 1; p <= q.order(); ++p)
      if (!closure.count(p)) {
        x = p;
        break;
      }
    gens.push_back(x);
    std::vector<int> seed(closure.begin(), closure.end());
    seed.push_back(x);
    auto bigger = divisionClosure(q, std::move(seed));
    closure = std::set<int>(bigger.begin(), bigger.end());
  }
  return gens;
}

Quasigroup directProduct(const std::vector<Quasigroup>& factors) {
  if (factors.empty()) fail(Errc::EmptyList, "direct product of no factors");
  if (factors.size() == 1) return factors.front();
  bool loop = true;
  long long total = 1;
  for (const auto& f : factors) {
    loop = loop && f.isLoop();
    total *= f.order();
  }
  int n = static_cast<int>(total);
  auto rankOf = [&](const std::vector<int>& tuple) {
    int rank = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) rank = rank * factors[k].order() + (tuple[k] - 1);
    return rank + 1;
  };
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(factors.size(), 1);
  for (;;) {
    tuples.push_back(cur);
    std::size_t k = factors.size();
    while (k > 0) {
      if (cur[k - 1] < factors[k - 1].order()) {
        ++cur[k - 1];
        break;
      }
      cur[k - 1] = 1;
      --k;
    }
    if (k == 0) break;
  }
  CanonicalTable out(n, std::vector<int>(static_cast<std::size_t>(n) * n));
  std::vector<int> prod(factors.size());
  for (const auto& a : tuples)
    for (const auto& b : tuples) {
      for (std::size_t k = 0; k < factors.size(); ++k) prod[k] = factors[k].mul(a[k], b[k]);
      out.set(rankOf(a), rankOf(b), rankOf(prod));
    }
  return Quasigroup::fromTable(std::move(out), loop ? Kind::loop : Kind::quasigroup);
}

int elementOrderOf(const Quasigroup& l, int x) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "element order is defined for loops");
  std::vector<int> gen = divisionClosure(l, {x});
  // extract the sub-table on <x> and require it to be a group
  int m = static_cast<int>(gen.size());
  std::vector<int> rel(l.order() + 1, 0);
  for (int i = 0; i < m; ++i) rel[gen[i]] = i + 1;
  CanonicalTable sub(m, std::vector<int>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub.set(i + 1, j + 1, rel[l.mul(gen[i], gen[j])]);
  if (!isAssociativeTable(sub))
    fail(Errc::NotPowerAssociative, "<x> is not a group at position " + std::to_string(x));
  int pw = x, ord = 1;
  while (pw != 1) {
    pw = l.mul(pw, x);
    ++ord;
  }
  return ord;
}

int exponentOf(const Quasigroup& l) {
  long long e = 1;
  for (int x = 1; x <= l.order(); ++x) e = std::lcm(e, static_cast<long long>(elementOrderOf(l, x)));
  return static_cast<int>(e);
}

}  // namespace loops
