#pragma once

#include <cstdint>
#include <vector>

#include "loops/perm.hpp"

namespace loops {

// Permutation group with a deterministic stabilizer chain (base points in
// natural order). Immutable once constructed. Degree cap 1000.
class PermGroup {
public:
  PermGroup() = default;  // trivial group of degree 0

  static PermGroup trivial(int degree);
  static PermGroup generated(int degree, std::vector<Permutation> gens);
  static PermGroup generated(std::vector<Permutation> gens);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const { return order_; }
  bool isTrivial() const { return order_ == 1; }
  bool contains(const Permutation& p) const;

  std::vector<int> orbit(int point) const;
  PermGroup stabilizer(int point) const;
  bool isTransitive() const;

  struct BlockSystem {
    bool primitive = false;
    std::vector<std::vector<int>> blocks;  // nontrivial witness when not primitive
  };
  // Throws NotTransitive on intransitive input.
  BlockSystem primitivity() const;

  PermGroup derivedSubgroup() const;
  std::vector<PermGroup> derivedSeries() const;
  std::vector<PermGroup> lowerCentralSeries() const;
  bool isSolvable() const;
  bool isNilpotent() const;
  bool isAbelian() const;
  PermGroup normalClosure(std::vector<Permutation> subgens) const;

  // Full enumeration; intended for small groups and test oracles.
  std::vector<Permutation> elements() const;

  const std::vector<int>& base() const { return base_; }

private:
  struct Level {
    int basePoint = 0;
    std::vector<Permutation> gens;        // strong generators fixing earlier base points
    std::vector<int> orbit;               // in discovery order
    std::vector<Permutation> transversal; // transversal[k] maps basePoint to orbit[k]
    std::vector<int> orbitIndex;          // point -> index in orbit, -1 if outside
  };

  void build();
  // Sift through the chain; returns residue and the level reached.
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> chain_;
  std::uint64_t order_ = 1;
};

}  // namespace loops
