#include "loops/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loops/error.hpp"

namespace loops {

namespace {

int localOrderInvariant(const Quasigroup& q, int x) {
  Quasigroup sub = subquasigroup(q, {x}, q.isLoop() ? Kind::loop : Kind::quasigroup);
  int m = sub.order();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        if (sub.mul(a, sub.mul(b, c)) != sub.mul(sub.mul(a, b), c)) return m;
  if (q.isLoop()) return elementOrderOf(q, x);
  return m;
}

struct IsoSearch {
  const Quasigroup* a = nullptr;
  const Quasigroup* b = nullptr;
  int n = 0;
  const std::vector<std::vector<int>>* ta = nullptr;
  const std::vector<std::vector<int>>* tb = nullptr;
  bool findAll = false;
  std::vector<Permutation> found;

  bool propagate(std::vector<int>& map, std::vector<char>& used) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 1; x <= n; ++x) {
        if (map[x] == 0) continue;
        for (int y = 1; y <= n; ++y) {
          if (map[y] == 0) continue;
          int p = a->mul(x, y);
          int t = b->mul(map[x], map[y]);
          if (map[p] == 0) {
            if (used[t] || (*ta)[p - 1] != (*tb)[t - 1]) return false;
            map[p] = t;
            used[t] = 1;
            changed = true;
          } else if (map[p] != t) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Returns true when the search should stop (single-witness mode, hit found).
  bool extend(std::vector<int> map, std::vector<char> used) {
    if (!propagate(map, used)) return false;
    int pick = 0, best = n + 1;
    for (int x = 1; x <= n; ++x) {
      if (map[x] != 0) continue;
      int cands = 0;
      for (int t = 1; t <= n; ++t)
        if (!used[t] && (*ta)[x - 1] == (*tb)[t - 1]) ++cands;
      if (cands == 0) return false;
      if (cands < best) {
        best = cands;
        pick = x;
      }
    }
    if (pick == 0) {
      std::vector<int> images(map.begin() + 1, map.end());
      Permutation p = Permutation::fromImages(std::move(images));
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
          if (p(a->mul(x, y)) != b->mul(p(x), p(y))) return false;
      found.push_back(std::move(p));
      return !findAll;
    }
    for (int t = 1; t <= n; ++t) {
      if (used[t] || (*ta)[pick - 1] != (*tb)[t - 1]) continue;
      auto map2 = map;
      auto used2 = used;
      map2[pick] = t;
      used2[t] = 1;
      if (extend(std::move(map2), std::move(used2))) return true;
    }
    return false;
  }

  void run() {
    std::vector<int> map(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    if (a->isLoop() && b->isLoop()) {
      if ((*ta)[0] != (*tb)[0]) return;
      map[1] = 1;
      used[1] = 1;
    }
    extend(std::move(map), std::move(used));
  }
};

}  // namespace

InvariantSignature invariantSignatureOf(const Quasigroup& q) {
  if (auto cached = q.attrs().tryGet<InvariantSignature>("invsig")) return *cached;
  int n = q.order();
  std::vector<int> phi1(n + 1);
  for (int x = 1; x <= n; ++x) phi1[x] = localOrderInvariant(q, x);
  std::set<int> orderValues(phi1.begin() + 1, phi1.end());

  InvariantSignature sig;
  sig.tuple.resize(n);
  for (int x = 1; x <= n; ++x) {
    std::vector<int>& t = sig.tuple[x - 1];
    t.push_back(phi1[x]);
    int sq = 0, fourth = 0;
    for (int y = 1; y <= n; ++y) {
      int y2 = q.mul(y, y);
      if (y2 == x) ++sq;
      if (q.mul(y2, y2) == x) ++fourth;
    }
    t.push_back(sq);
    t.push_back(fourth);
    for (int k : orderValues) {
      int cnt = 0;
      for (int y = 1; y <= n; ++y)
        if (phi1[y] == k && q.mul(x, y) == q.mul(y, x)) ++cnt;
      t.push_back(cnt);
    }
  }
  std::map<std::vector<int>, int> classes;
  for (const auto& t : sig.tuple) ++classes[t];
  for (const auto& [t, c] : classes) sig.profile.emplace_back(t, c);
  std::stable_sort(sig.profile.begin(), sig.profile.end(),
                   [](const auto& u, const auto& v) {
                     if (u.second != v.second) return u.second < v.second;
                     return u.first < v.first;
                   });
  q.attrs().set("invsig", sig);
  return sig;
}

std::optional<Permutation> isomorphismBetween(const Quasigroup& a, const Quasigroup& b) {
  if (a.order() != b.order() || a.isLoop() != b.isLoop()) return std::nullopt;
  InvariantSignature sa = invariantSignatureOf(a);
  InvariantSignature sb = invariantSignatureOf(b);
  if (sa.profile != sb.profile) return std::nullopt;
  IsoSearch s;
  s.a = &a;
  s.b = &b;
  s.n = a.order();
  s.ta = &sa.tuple;
  s.tb = &sb.tuple;
  s.findAll = false;
  s.run();
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

PermGroup automorphismGroupOf(const Quasigroup& q) {
  if (auto cached = q.attrs().tryGet<PermGroup>("autgrp")) return *cached;
  InvariantSignature sig = invariantSignatureOf(q);
  IsoSearch s;
  s.a = &q;
  s.b = &q;
  s.n = q.order();
  s.ta = &sig.tuple;
  s.tb = &sig.tuple;
  s.findAll = true;
  s.run();
  PermGroup g = PermGroup::generated(q.order(), std::move(s.found));
  q.attrs().set("autgrp", g);
  return g;
}

std::vector<Quasigroup> upToIsomorphism(const std::vector<Quasigroup>& list) {
  std::vector<Quasigroup> reps;
  for (const auto& q : list) {
    bool fresh = true;
    for (const auto& r : reps)
      if (isomorphismBetween(q, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(q);
  }
  return reps;
}

std::optional<Isotopism> isotopismBetween(const Quasigroup& a, const Quasigroup& b) {
  if (!a.isLoop() || !b.isLoop()) fail(Errc::LoopRequired, "isotopism search");
  if (a.order() != b.order()) return std::nullopt;
  int n = a.order();
  auto secL = section(a, Side::left);
  auto secR = section(a, Side::right);
  for (int f = 1; f <= n; ++f)
    for (int g = 1; g <= n; ++g) {
      Quasigroup p = principalIsotope(a, f, g);
      auto theta = isomorphismBetween(p, b);
      if (!theta) continue;
      int e = a.mul(f, g);
      std::vector<int> timg(n);
      for (int i = 0; i < n; ++i) timg[i] = i + 1;
      std::swap(timg[0], timg[e - 1]);
      Permutation t = Permutation::fromImages(std::move(timg));
      Isotopism iso{secR[g - 1] * t * *theta, secL[f - 1] * t * *theta, t * *theta};
      bool ok = true;
      for (int x = 1; x <= n && ok; ++x)
        for (int y = 1; y <= n; ++y)
          if (b.mul(iso.alpha(x), iso.beta(y)) != iso.gamma(a.mul(x, y))) {
            ok = false;
            break;
          }
      if (ok) return iso;
    }
  return std::nullopt;
}

std::vector<Quasigroup> upToIsotopism(const std::vector<Quasigroup>& list) {
  std::vector<Quasigroup> reps;
  for (const auto& q : list) {
    bool fresh = true;
    for (const auto& r : reps)
      if (isotopismBetween(q, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(q);
  }
  return reps;
}

}  // namespace loops
