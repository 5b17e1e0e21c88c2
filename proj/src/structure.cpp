#include "loops/structure.hpp"

#include <algorithm>
#include <set>

namespace loops {

namespace {

std::string sideKey(MultSide s) {
  switch (s) {
    case MultSide::left: return "left";
    case MultSide::right: return "right";
    case MultSide::full: return "full";
  }
  return "?";
}

std::set<int> relativeSetOf(const Quasigroup& l, const Quasigroup& s) {
  if (!l.sameFamily(s)) fail(Errc::NotASubloop, "subobject from a different family");
  std::set<int> out;
  for (int p : s.posInParent()) {
    int r = l.relativePosOf(p);
    if (r == 0) fail(Errc::NotASubloop, "subobject positions not contained in the loop");
    out.insert(r);
  }
  return out;
}

}  // namespace

PermGroup multiplicationGroup(const Quasigroup& q, MultSide side) {
  std::string key = "mlt:" + sideKey(side);
  if (auto cached = q.attrs().tryGet<PermGroup>(key)) return *cached;
  std::vector<Permutation> gens;
  if (side != MultSide::right)
    for (auto& p : section(q, Side::left)) gens.push_back(std::move(p));
  if (side != MultSide::left)
    for (auto& p : section(q, Side::right)) gens.push_back(std::move(p));
  PermGroup g = PermGroup::generated(q.order(), std::move(gens));
  q.attrs().set(key, g);
  return g;
}

PermGroup relativeMultiplicationGroup(const Quasigroup& l, const Quasigroup& s, MultSide side) {
  std::set<int> srel = relativeSetOf(l, s);
  std::vector<int> members(srel.begin(), srel.end());
  int m = static_cast<int>(members.size());
  std::vector<int> index(l.order() + 1, 0);
  for (int i = 0; i < m; ++i) index[members[i]] = i + 1;
  std::vector<Permutation> gens;
  auto restricted = [&](int x, Side sd) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) {
      int y = members[i];
      int z = (sd == Side::left) ? l.mul(x, y) : l.mul(y, x);
      if (index[z] == 0)
        fail(Errc::NotClosedUnderTranslations,
             "translation by position " + std::to_string(x) + " leaves the subloop");
      img[i] = index[z];
    }
    return Permutation::fromImages(std::move(img));
  };
  for (int x : members) {
    if (side != MultSide::right) gens.push_back(restricted(x, Side::left));
    if (side != MultSide::left) gens.push_back(restricted(x, Side::right));
  }
  return PermGroup::generated(m, std::move(gens));
}

PermGroup innerMappingGroup(const Quasigroup& l, MultSide side) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "inner mapping group");
  std::string key = "inn:" + sideKey(side);
  if (auto cached = l.attrs().tryGet<PermGroup>(key)) return *cached;
  PermGroup g;
  if (side == MultSide::full) {
    g = multiplicationGroup(l, MultSide::full).stabilizer(1);
  } else {
    auto sec = section(l, side == MultSide::left ? Side::left : Side::right);
    std::vector<Permutation> gens;
    for (int x = 1; x <= l.order(); ++x)
      for (int y = 1; y <= l.order(); ++y) {
        if (side == MultSide::left) {
          // z -> L_{yx}^{-1} L_y L_x z
          gens.push_back(sec[x - 1] * sec[y - 1] * sec[l.mul(y, x) - 1].inverse());
        } else {
          // z -> R_{xy}^{-1} R_y R_x z
          gens.push_back(sec[x - 1] * sec[y - 1] * sec[l.mul(x, y) - 1].inverse());
        }
      }
    g = PermGroup::generated(l.order(), std::move(gens));
  }
  l.attrs().set(key, g);
  return g;
}

std::vector<int> centralParts(const Quasigroup& q, CentralKind kind) {
  int n = q.order();
  auto inLeftNuc = [&](int a) {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (q.mul(a, q.mul(x, y)) != q.mul(q.mul(a, x), y)) return false;
    return true;
  };
  auto inRightNuc = [&](int a) {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (q.mul(x, q.mul(y, a)) != q.mul(q.mul(x, y), a)) return false;
    return true;
  };
  auto inMiddleNuc = [&](int a) {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (q.mul(x, q.mul(a, y)) != q.mul(q.mul(x, a), y)) return false;
    return true;
  };
  auto inCommutant = [&](int a) {
    for (int y = 1; y <= n; ++y)
      if (q.mul(a, y) != q.mul(y, a)) return false;
    return true;
  };
  std::vector<int> out;
  for (int a = 1; a <= n; ++a) {
    bool in = false;
    switch (kind) {
      case CentralKind::leftNucleus: in = inLeftNuc(a); break;
      case CentralKind::rightNucleus: in = inRightNuc(a); break;
      case CentralKind::middleNucleus: in = inMiddleNuc(a); break;
      case CentralKind::nucleus: in = inLeftNuc(a) && inRightNuc(a) && inMiddleNuc(a); break;
      case CentralKind::commutant: in = inCommutant(a); break;
      case CentralKind::center:
        in = inCommutant(a) && inLeftNuc(a) && inRightNuc(a) && inMiddleNuc(a);
        break;
    }
    if (in) out.push_back(a);
  }
  return out;
}

Quasigroup centralPartSubloop(const Quasigroup& l, CentralKind kind) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "central part as subloop");
  return subquasigroup(l, centralParts(l, kind), Kind::loop);
}

bool isNormalSub(const Quasigroup& l, const Quasigroup& s) {
  std::set<int> srel = relativeSetOf(l, s);
  if (!isSubquasigroup(l, {srel.begin(), srel.end()}))
    fail(Errc::NotASubloop, "set is not division-closed");
  PermGroup inn = innerMappingGroup(l, MultSide::full);
  for (const auto& g : inn.generators())
    for (int x : srel)
      if (!srel.count(g(x))) return false;
  return true;
}

Quasigroup normalClosureOf(const Quasigroup& l, const std::vector<int>& s) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "normal closure");
  PermGroup inn = innerMappingGroup(l, MultSide::full);
  std::set<int> cur(s.begin(), s.end());
  cur.insert(1);
  for (;;) {
    // close under inner mappings
    std::set<int> next = cur;
    for (const auto& g : inn.generators())
      for (int x : cur) next.insert(g(x));
    // close under subloop generation
    Quasigroup sub = subquasigroup(l, {next.begin(), next.end()}, Kind::loop);
    std::set<int> closed = relativeSetOf(l, sub);
    if (closed == cur) {
      return sub;
    }
    cur = std::move(closed);
  }
}

bool isSimpleLoop(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "isSimpleLoop");
  return multiplicationGroup(l, MultSide::full).primitivity().primitive;
}

FactorLoop factorLoopOf(const Quasigroup& l, const Quasigroup& n) {
  if (!isNormalSub(l, n)) fail(Errc::NotNormal, "factor by a non-normal subloop");
  Cosets cs = rightCosets(l, n);
  int m = static_cast<int>(cs.cosets.size());
  std::vector<int> cosetOf(l.order() + 1, 0);
  for (int c = 0; c < m; ++c)
    for (int x : cs.cosets[c]) cosetOf[x] = c + 1;
  CanonicalTable t(m, std::vector<int>(m * m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      int target = cosetOf[l.mul(cs.transversal[i - 1], cs.transversal[j - 1])];
      // well-definedness across the whole blocks
      for (int a : cs.cosets[i - 1])
        for (int b : cs.cosets[j - 1])
          if (cosetOf[l.mul(a, b)] != target)
            fail(Errc::NotNormal, "coset multiplication is not well defined");
      t.set(i, j, target);
    }
  FactorLoop out;
  out.loop = Quasigroup::fromTable(std::move(t), Kind::loop);
  out.naturalMap.assign(cosetOf.begin() + 1, cosetOf.end());
  return out;
}

Quasigroup verbalSubloop(const Quasigroup& l, VerbalKind kind) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "verbal subloop");
  int n = l.order();
  std::set<int> gens;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) gens.insert(associatorOf(l, x, y, z));
  if (kind != VerbalKind::associator)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) gens.insert(commutatorOf(l, x, y));
  if (kind == VerbalKind::frattini)
    for (int x = 1; x <= n; ++x) gens.insert(l.mul(x, x));
  return normalClosureOf(l, {gens.begin(), gens.end()});
}

std::vector<Quasigroup> upperCentralSeriesOf(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "upper central series");
  std::vector<Quasigroup> series;
  series.push_back(subquasigroup(l, {1}, Kind::loop));
  for (;;) {
    const Quasigroup& z = series.back();
    if (z.order() == l.order()) break;
    FactorLoop f = factorLoopOf(l, z);
    std::vector<int> zq = centralParts(f.loop, CentralKind::center);
    std::set<int> zqSet(zq.begin(), zq.end());
    std::vector<int> preimage;
    for (int p = 1; p <= l.order(); ++p)
      if (zqSet.count(f.naturalMap[p - 1])) preimage.push_back(p);
    Quasigroup next = subquasigroup(l, preimage, Kind::loop);
    if (next.order() == z.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Quasigroup> lowerCentralSeriesOf(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "lower central series");
  int n = l.order();
  std::vector<Quasigroup> series{subquasigroup(l, [&] {
                                   std::vector<int> all(n);
                                   for (int i = 0; i < n; ++i) all[i] = i + 1;
                                   return all;
                                 }(),
                                 Kind::loop)};
  for (;;) {
    std::set<int> prev = relativeSetOf(l, series.back());
    std::set<int> gens;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        if (prev.count(x) || prev.count(y)) gens.insert(commutatorOf(l, x, y));
        for (int z = 1; z <= n; ++z)
          if (prev.count(x) || prev.count(y) || prev.count(z))
            gens.insert(associatorOf(l, x, y, z));
      }
    Quasigroup next = normalClosureOf(l, {gens.begin(), gens.end()});
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

std::optional<int> nilpotencyClassOf(const Quasigroup& l) {
  auto series = upperCentralSeriesOf(l);
  if (l.order() == 1) return 0;
  if (series.back().order() != l.order()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

Solvability solvabilityOf(const Quasigroup& l) {
  Solvability out;
  out.derivedSeries.push_back(l);
  for (;;) {
    const Quasigroup& d = out.derivedSeries.back();
    if (d.order() == 1) break;
    Quasigroup next = verbalSubloop(d, VerbalKind::derived);
    if (next.order() == d.order()) break;
    out.derivedSeries.push_back(std::move(next));
  }
  out.solvable = out.derivedSeries.back().order() == 1;
  if (out.solvable) out.derivedLength = static_cast<int>(out.derivedSeries.size()) - 1;
  return out;
}

Quasigroup isomorphicCopyByNormalSubloop(const Quasigroup& l, const Quasigroup& s) {
  if (!isNormalSub(l, s)) fail(Errc::NotNormal, "renumbering by a non-normal subloop");
  Cosets cs = rightCosets(l, s);
  std::vector<int> images(l.order());
  int next = 1;
  for (const auto& coset : cs.cosets)
    for (int x : coset) images[x - 1] = next++;
  return isomorphicCopyByPerm(l, Permutation::fromImages(std::move(images)));
}

bool isStronglyNilpotentLoop(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "isStronglyNilpotent");
  return multiplicationGroup(l, MultSide::full).isNilpotent();
}

}  // namespace loops
