#include "loops/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loops {

namespace {

constexpr int kDegreeCap = 1000;

std::vector<int> plainOrbit(int degree, const std::vector<Permutation>& gens, int point) {
  std::vector<char> seen(degree + 1, 0);
  std::vector<int> frontier{point}, out{point};
  seen[point] = 1;
  while (!frontier.empty()) {
    int p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      int q = g(p);
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
        frontier.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  return generated(degree, {});
}

PermGroup PermGroup::generated(std::vector<Permutation> gens) {
  if (gens.empty()) fail(Errc::DegreeMismatch, "cannot infer degree from an empty generator list");
  int degree = gens.front().degree();
  return generated(degree, std::move(gens));
}

PermGroup PermGroup::generated(int degree, std::vector<Permutation> gens) {
  if (degree < 0 || degree > kDegreeCap) fail(Errc::DegreeMismatch, "degree outside [0, 1000]");
  for (const auto& g : gens)
    if (g.degree() != degree) fail(Errc::DegreeMismatch, "generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = std::move(gens);
  G.build();
  return G;
}

void PermGroup::build() {
  strong_.clear();
  for (const auto& g : gens_)
    if (!g.isIdentity() && std::find(strong_.begin(), strong_.end(), g) == strong_.end())
      strong_.push_back(g);
  base_.clear();

  // Rebuild the chain from the current strong set, then sift all Schreier
  // generators; any nontrivial residue joins the strong set and we start over.
  // Deterministic and adequate for the degrees loop computations produce.
  for (;;) {
    chain_.clear();
    std::vector<Permutation> current = strong_;
    base_.clear();
    while (!current.empty()) {
      int b = 0;
      for (int p = 1; p <= degree_ && b == 0; ++p)
        for (const auto& g : current)
          if (g(p) != p) {
            b = p;
            break;
          }
      if (b == 0) break;  // all remaining strong gens are identity (cannot happen)
      Level lv;
      lv.basePoint = b;
      lv.gens = current;
      lv.orbitIndex.assign(degree_ + 1, -1);
      lv.orbit = {b};
      lv.orbitIndex[b] = 0;
      lv.transversal = {Permutation(degree_)};
      for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        int p = lv.orbit[k];
        for (const auto& g : lv.gens) {
          int q = g(p);
          if (lv.orbitIndex[q] < 0) {
            lv.orbitIndex[q] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(q);
            lv.transversal.push_back(lv.transversal[k] * g);
          }
        }
      }
      base_.push_back(b);
      chain_.push_back(std::move(lv));
      std::vector<Permutation> next;
      for (const auto& g : current)
        if (g(b) == b) next.push_back(g);
      current = std::move(next);
    }

    // closure check via Schreier generators
    bool added = false;
    for (std::size_t i = 0; i < chain_.size() && !added; ++i) {
      const Level& lv = chain_[i];
      for (std::size_t k = 0; k < lv.orbit.size() && !added; ++k) {
        for (const auto& s : lv.gens) {
          int image = s(lv.orbit[k]);
          Permutation schreier =
              lv.transversal[k] * s * lv.transversal[lv.orbitIndex[image]].inverse();
          auto [residue, level] = sift(schreier);
          if (!residue.isIdentity()) {
            strong_.push_back(residue);
            added = true;
            break;
          }
        }
      }
    }
    if (!added) break;
  }

  order_ = 1;
  for (const auto& lv : chain_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& p) const {
  Permutation r = p;
  std::size_t i = 0;
  for (; i < chain_.size(); ++i) {
    const Level& lv = chain_[i];
    int image = r(lv.basePoint);
    if (lv.orbitIndex[image] < 0) return {r, i};
    r = r * lv.transversal[lv.orbitIndex[image]].inverse();
  }
  return {r, i};
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) fail(Errc::DegreeMismatch, "membership query with wrong degree");
  auto [residue, level] = sift(p);
  return residue.isIdentity();
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 1 || point > degree_) fail(Errc::PointOutOfRange, "orbit point " + std::to_string(point));
  return plainOrbit(degree_, strong_, point);
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 1 || point > degree_) fail(Errc::PointOutOfRange, "stabilizer point " + std::to_string(point));
  // Orbit of `point` with transversal, then Schreier generators.
  std::vector<int> orb{point};
  std::vector<int> idx(degree_ + 1, -1);
  idx[point] = 0;
  std::vector<Permutation> trans{Permutation(degree_)};
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (const auto& g : strong_) {
      int q = g(orb[k]);
      if (idx[q] < 0) {
        idx[q] = static_cast<int>(orb.size());
        orb.push_back(q);
        trans.push_back(trans[k] * g);
      }
    }
  }
  std::vector<Permutation> stabGens;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (const auto& g : strong_) {
      Permutation s = trans[k] * g * trans[idx[g(orb[k])]].inverse();
      if (!s.isIdentity() && std::find(stabGens.begin(), stabGens.end(), s) == stabGens.end())
        stabGens.push_back(s);
    }
  }
  return generated(degree_, std::move(stabGens));
}

bool PermGroup::isTransitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(1).size()) == degree_;
}

PermGroup::BlockSystem PermGroup::primitivity() const {
  if (!isTransitive()) fail(Errc::NotTransitive, "primitivity requires a transitive group");
  BlockSystem out;
  if (degree_ <= 2) {
    out.primitive = true;
    return out;
  }
  // Minimal block system containing {1,k}, seeds in ascending order.
  for (int k = 2; k <= degree_; ++k) {
    std::vector<int> parent(degree_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> work;
    auto merge = [&](int x, int y) {
      int rx = find(x), ry = find(y);
      if (rx == ry) return;
      if (rx > ry) std::swap(rx, ry);
      parent[ry] = rx;
      work.emplace_back(x, y);
    };
    merge(1, k);
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      for (const auto& g : strong_) merge(g(x), g(y));
    }
    std::vector<std::vector<int>> classes(degree_ + 1);
    for (int p = 1; p <= degree_; ++p) classes[find(p)].push_back(p);
    int blockSize = static_cast<int>(classes[find(1)].size());
    if (blockSize < degree_) {
      // nontrivial system (blockSize > 1 since 1 and k share a block)
      for (auto& c : classes)
        if (!c.empty()) out.blocks.push_back(std::move(c));
      std::sort(out.blocks.begin(), out.blocks.end());
      return out;
    }
  }
  out.primitive = true;
  return out;
}

PermGroup PermGroup::normalClosure(std::vector<Permutation> subgens) const {
  std::vector<Permutation> cl;
  for (auto& s : subgens)
    if (!s.isIdentity() && std::find(cl.begin(), cl.end(), s) == cl.end()) cl.push_back(std::move(s));
  PermGroup H = generated(degree_, cl);
  for (;;) {
    bool grew = false;
    for (std::size_t i = 0; i < cl.size() && !grew; ++i) {
      for (const auto& g : strong_) {
        Permutation c = conjugate(cl[i], g);
        if (!H.contains(c)) {
          cl.push_back(c);
          H = generated(degree_, cl);
          grew = true;
          break;
        }
      }
    }
    if (!grew) return H;
  }
}

PermGroup PermGroup::derivedSubgroup() const {
  std::vector<Permutation> comms;
  for (const auto& a : strong_)
    for (const auto& b : strong_) comms.push_back(commutator(a, b));
  return normalClosure(std::move(comms));
}

std::vector<PermGroup> PermGroup::derivedSeries() const {
  std::vector<PermGroup> series{*this};
  for (;;) {
    PermGroup next = series.back().derivedSubgroup();
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().isTrivial()) break;
  }
  return series;
}

std::vector<PermGroup> PermGroup::lowerCentralSeries() const {
  std::vector<PermGroup> series{*this};
  for (;;) {
    std::vector<Permutation> comms;
    for (const auto& a : strong_)
      for (const auto& b : series.back().generators()) comms.push_back(commutator(a, b));
    PermGroup next = normalClosure(std::move(comms));
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().isTrivial()) break;
  }
  return series;
}

bool PermGroup::isSolvable() const { return derivedSeries().back().isTrivial(); }

bool PermGroup::isNilpotent() const { return lowerCentralSeries().back().isTrivial(); }

bool PermGroup::isAbelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

std::vector<Permutation> PermGroup::elements() const {
  std::set<Permutation> all{Permutation(degree_)};
  std::vector<Permutation> frontier{Permutation(degree_)};
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : strong_) {
      Permutation q = p * g;
      if (all.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace loops
