#pragma once

#include <optional>
#include <vector>

#include "loops/permgroup.hpp"
#include "loops/quasigroup.hpp"

namespace loops {

// Per-element isomorphism invariants and the derived class-size profile.
struct InvariantSignature {
  // tuple[x-1]: invariant vector of position x
  std::vector<std::vector<int>> tuple;
  // (invariant vector, class size), ordered by increasing class size, then tuple
  std::vector<std::pair<std::vector<int>, int>> profile;
};
InvariantSignature invariantSignatureOf(const Quasigroup& q);

// A permutation p with p(x*y) = p(x)*p(y), verified cell-exhaustively.
std::optional<Permutation> isomorphismBetween(const Quasigroup& a, const Quasigroup& b);

PermGroup automorphismGroupOf(const Quasigroup& q);

std::vector<Quasigroup> upToIsomorphism(const std::vector<Quasigroup>& list);

struct Isotopism {
  Permutation alpha, beta, gamma;  // alpha(x) * beta(y) = gamma(x y)
};
std::optional<Isotopism> isotopismBetween(const Quasigroup& a, const Quasigroup& b);

std::vector<Quasigroup> upToIsotopism(const std::vector<Quasigroup>& list);

}  // namespace loops
