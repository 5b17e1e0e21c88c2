#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "loops/isomorphism.hpp"
#include "loops/structure.hpp"

using namespace loops;
using namespace testutil;

TEST_CASE("multiplication groups of groups and of N5") {
  CHECK(multiplicationGroup(cyclic(4)).order() == 4);     // Mlt(abelian G) = G
  CHECK(multiplicationGroup(sym3()).order() == 36);       // G x G / Z = 6*6/1
  CHECK(multiplicationGroup(n5()).order() == 120);        // S5, pinned
  CHECK(multiplicationGroup(n5(), MultSide::left).order() == 120);
}

TEST_CASE("inner mapping groups") {
  CHECK(innerMappingGroup(cyclic(4)).order() == 1);
  CHECK(innerMappingGroup(sym3()).order() == 6);  // inner automorphisms of S3
  PermGroup inn = innerMappingGroup(n5());
  CHECK(inn.order() == 24);  // pinned
  CHECK_FALSE(inn.isAbelian());
  // orbit-stabilizer: |Mlt| = |L| * |Inn|
  CHECK(multiplicationGroup(n5()).order() == 5 * inn.order());
  // full variant equals the closure of one-sided inner families plus middle maps
  Quasigroup q = n5();
  std::vector<Permutation> gens;
  PermGroup leftInn = innerMappingGroup(q, MultSide::left);
  PermGroup rightInn = innerMappingGroup(q, MultSide::right);
  for (const auto& g : leftInn.generators()) gens.push_back(g);
  for (const auto& g : rightInn.generators()) gens.push_back(g);
  for (int x = 1; x <= q.order(); ++x)
    gens.push_back(translation(q, Side::right, x) * translation(q, Side::left, x).inverse());
  CHECK(PermGroup::generated(q.order(), gens).order() == inn.order());
}

TEST_CASE("relative multiplication group") {
  Quasigroup s3 = sym3();
  Quasigroup a3 = subquasigroup(s3, {5}, Kind::loop);
  CHECK(relativeMultiplicationGroup(s3, a3).order() == 3);
  Quasigroup z2 = subquasigroup(s3, {2}, Kind::loop);
  CHECK(relativeMultiplicationGroup(s3, z2).order() == 2);
}

TEST_CASE("nuclei, commutant and center") {
  Quasigroup s3 = sym3();
  CHECK(centralParts(s3, CentralKind::nucleus).size() == 6);  // group: everything associates
  CHECK(centralParts(s3, CentralKind::commutant) == std::vector<int>{1});
  CHECK(centralParts(s3, CentralKind::center) == std::vector<int>{1});

  Quasigroup q = n5();
  CHECK(centralParts(q, CentralKind::leftNucleus) == std::vector<int>{1});
  CHECK(centralParts(q, CentralKind::rightNucleus) == std::vector<int>{1});
  CHECK(centralParts(q, CentralKind::middleNucleus) == std::vector<int>{1});
  CHECK(centralParts(q, CentralKind::center) == std::vector<int>{1});

  Quasigroup d8 = dihedral8();
  CHECK(centralParts(d8, CentralKind::center).size() == 2);
  CHECK(centralPartSubloop(d8, CentralKind::center).order() == 2);
}

TEST_CASE("normality") {
  Quasigroup s3 = sym3();
  CHECK(isNormalSub(s3, subquasigroup(s3, {5}, Kind::loop)));       // A3
  CHECK_FALSE(isNormalSub(s3, subquasigroup(s3, {2}, Kind::loop)));  // <(12)>
  CHECK(normalClosureOf(s3, {2}).order() == 6);
  CHECK(normalClosureOf(s3, {5}).order() == 3);
}

TEST_CASE("factor loops") {
  Quasigroup s3 = sym3();
  FactorLoop f = factorLoopOf(s3, subquasigroup(s3, {5}, Kind::loop));
  CHECK(f.loop.order() == 2);
  CHECK(f.naturalMap == std::vector<int>{1, 2, 2, 2, 1, 1});
  CHECK_THROWS_AS(factorLoopOf(s3, subquasigroup(s3, {2}, Kind::loop)), Error);
}

TEST_CASE("simplicity") {
  CHECK(isSimpleLoop(n5()));
  CHECK(isSimpleLoop(cyclic(3)));
  CHECK_FALSE(isSimpleLoop(cyclic(4)));
  CHECK_FALSE(isSimpleLoop(sym3()));
}

TEST_CASE("verbal subloops") {
  Quasigroup s3 = sym3();
  CHECK(verbalSubloop(s3, VerbalKind::derived).order() == 3);     // A3
  CHECK(verbalSubloop(s3, VerbalKind::associator).order() == 1);  // groups associate
  CHECK(verbalSubloop(s3, VerbalKind::frattini).order() == 3);    // squares lie in A3
  CHECK(verbalSubloop(cyclic(4), VerbalKind::frattini).order() == 2);
  CHECK(verbalSubloop(n5(), VerbalKind::associator).order() == 5);
}

TEST_CASE("central series and nilpotency") {
  CHECK(nilpotencyClassOf(cyclic(4)) == 1);
  CHECK(nilpotencyClassOf(dihedral8()) == 2);
  CHECK(nilpotencyClassOf(subquasigroup(sym3(), {1}, Kind::loop)) == 0);
  CHECK_FALSE(nilpotencyClassOf(sym3()).has_value());
  CHECK_FALSE(nilpotencyClassOf(n5()).has_value());

  auto upper = upperCentralSeriesOf(dihedral8());
  std::vector<int> orders;
  for (const auto& s : upper) orders.push_back(s.order());
  CHECK(orders == std::vector<int>{1, 2, 8});

  auto lower = lowerCentralSeriesOf(dihedral8());
  orders.clear();
  for (const auto& s : lower) orders.push_back(s.order());
  CHECK(orders == std::vector<int>{8, 2, 1});
}

TEST_CASE("solvability") {
  Solvability s = solvabilityOf(sym3());
  CHECK(s.solvable);
  CHECK(s.derivedLength == 2);
  CHECK_FALSE(solvabilityOf(n5()).solvable);
  CHECK(solvabilityOf(cyclic(6)).derivedLength == 1);
}

TEST_CASE("strong nilpotency") {
  CHECK(isStronglyNilpotentLoop(cyclic(4)));
  CHECK(isStronglyNilpotentLoop(dihedral8()));
  CHECK_FALSE(isStronglyNilpotentLoop(sym3()));
  CHECK_FALSE(isStronglyNilpotentLoop(n5()));
}

TEST_CASE("renumbering by a normal subloop keeps the isomorphism type") {
  Quasigroup s3 = sym3();
  Quasigroup copy = isomorphicCopyByNormalSubloop(s3, subquasigroup(s3, {5}, Kind::loop));
  CHECK(copy.order() == 6);
  CHECK(isomorphismBetween(s3, copy).has_value());
  // the subloop's elements come first in the new numbering
  CHECK(isSubquasigroup(copy, {1, 2, 3}));
  CHECK_THROWS_AS(isomorphicCopyByNormalSubloop(s3, subquasigroup(s3, {2}, Kind::loop)), Error);
}
