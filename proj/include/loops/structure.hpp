#pragma once

#include <optional>

#include "loops/permgroup.hpp"
#include "loops/quasigroup.hpp"

namespace loops {

enum class MultSide { left, right, full };

PermGroup multiplicationGroup(const Quasigroup& q, MultSide side = MultSide::full);
// Translations of l by elements of s, restricted to s's positions.
PermGroup relativeMultiplicationGroup(const Quasigroup& l, const Quasigroup& s,
                                      MultSide side = MultSide::full);

PermGroup innerMappingGroup(const Quasigroup& l, MultSide side = MultSide::full);

enum class CentralKind { leftNucleus, rightNucleus, middleNucleus, nucleus, commutant, center };

// Relative positions, ascending.
std::vector<int> centralParts(const Quasigroup& q, CentralKind kind);
// The same set wrapped as a subloop (requires a loop; the sets are division-closed there).
Quasigroup centralPartSubloop(const Quasigroup& l, CentralKind kind);

bool isNormalSub(const Quasigroup& l, const Quasigroup& s);
Quasigroup normalClosureOf(const Quasigroup& l, const std::vector<int>& s);
bool isSimpleLoop(const Quasigroup& l);

struct FactorLoop {
  Quasigroup loop;
  std::vector<int> naturalMap;  // naturalMap[pos-1] = coset index in the factor
};
FactorLoop factorLoopOf(const Quasigroup& l, const Quasigroup& n);

enum class VerbalKind { derived, associator, frattini };
Quasigroup verbalSubloop(const Quasigroup& l, VerbalKind kind);

std::vector<Quasigroup> upperCentralSeriesOf(const Quasigroup& l);
std::vector<Quasigroup> lowerCentralSeriesOf(const Quasigroup& l);
// Nullopt when not nilpotent.
std::optional<int> nilpotencyClassOf(const Quasigroup& l);

struct Solvability {
  bool solvable = false;
  std::optional<int> derivedLength;
  std::vector<Quasigroup> derivedSeries;
};
Solvability solvabilityOf(const Quasigroup& l);

bool isStronglyNilpotentLoop(const Quasigroup& l);

}  // namespace loops
