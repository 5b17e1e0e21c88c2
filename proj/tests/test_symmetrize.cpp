#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "loops/codeloops.hpp"
#include "loops/isomorphism.hpp"
#include "loops/structure.hpp"
#include "loops/symmetrize.hpp"

using namespace loops;
using namespace testutil;

namespace {

long long muOracle(const Quasigroup& q) {
  long long mu = 0;
  int n = q.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) ++mu;
  return mu;
}

}  // namespace

TEST_CASE("mu counts nonassociative triples") {
  CHECK(muOf(cyclic(4)) == 0);
  CHECK(muOf(sym3()) == 0);
  CHECK(muOf(n5()) == 51);
  CHECK(muOf(n5()) == muOracle(n5()));
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(3);
  s.setAlpha(0, 1, 2, 1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(muOf(l) == muOracle(l));
  CHECK(muOf(l) > 0);
}

TEST_CASE("mu is invariant under isomorphic copies") {
  std::mt19937 rng(13);
  Quasigroup q = n5();
  for (int trial = 0; trial < 10; ++trial) {
    Quasigroup c = isomorphicCopyByPerm(q, randomIdentityFixingPerm(5, rng));
    CHECK(muOf(c) == 51);
  }
}

TEST_CASE("block structure of Z8 modulo its order-two center part") {
  Quasigroup z8 = cyclic(8);
  Quasigroup s = subquasigroup(z8, {5}, Kind::loop);  // {0,4} as residues
  REQUIRE(s.order() == 2);
  BlockStructure b = makeBlockStructure(z8, s, 5);
  CHECK(b.numBlocks == 4);
  CHECK(b.h == 5);
  for (int x = 1; x <= 8; ++x) CHECK(b.hTranslate[x] == z8.mul(5, x));
  // blocks partition
  std::vector<int> seen(9, 0);
  for (const auto& blk : b.blocks)
    for (int x : blk) ++seen[x];
  for (int x = 1; x <= 8; ++x) CHECK(seen[x] == 1);
}

TEST_CASE("block structure preconditions") {
  Quasigroup z8 = cyclic(8);
  Quasigroup s = subquasigroup(z8, {5}, Kind::loop);
  // h not an involution
  try {
    makeBlockStructure(z8, subquasigroup(z8, {3}, Kind::loop), 3);
    FAIL_CHECK("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  // h not in the subloop
  try {
    makeBlockStructure(z8, s, 2);
    FAIL_CHECK("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  // h not central
  Quasigroup d8 = dihedral8();
  int reflection = 0;
  auto center = centralParts(d8, CentralKind::center);
  for (int x = 2; x <= 8; ++x)
    if (d8.mul(x, x) == 1 &&
        std::find(center.begin(), center.end(), x) == center.end()) {
      reflection = x;
      break;
    }
  REQUIRE(reflection != 0);
  try {
    makeBlockStructure(d8, subquasigroup(d8, {reflection}, Kind::loop), reflection);
    FAIL_CHECK("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("block flips are involutive and preserve Latinness") {
  Quasigroup z8 = cyclic(8);
  Quasigroup s = subquasigroup(z8, {5}, Kind::loop);
  BlockStructure b = makeBlockStructure(z8, s, 5);
  CanonicalTable t = z8.table();
  CanonicalTable once = blockFlip(t, b, 2, 4);
  CHECK_FALSE(once.cells() == t.cells());
  CHECK(once.isLatin());
  CanonicalTable twice = blockFlip(once, b, 2, 4);
  CHECK(twice.cells() == t.cells());
  CHECK_THROWS_AS(blockFlip(t, b, 3, 3), Error);
}

TEST_CASE("greedy symmetrization recovers a group from a flipped copy") {
  Quasigroup z8 = cyclic(8);
  Quasigroup s = subquasigroup(z8, {5}, Kind::loop);
  BlockStructure b = makeBlockStructure(z8, s, 5);
  CanonicalTable broken = blockFlip(z8.table(), b, 2, 3);
  Quasigroup start = makeQuasigroup(broken, Kind::loop);
  long long mu0 = muOf(start);
  REQUIRE(mu0 > 0);
  Quasigroup sub = subquasigroup(start, {5}, Kind::loop);
  GreedyResult r = greedySymmetrize(start, sub, 5);
  CHECK(r.mu == 0);
  CHECK(muOf(r.loop) == 0);
  REQUIRE_FALSE(r.trace.empty());
  long long prev = mu0;
  for (const GreedyStep& step : r.trace) {
    CHECK(step.mu < prev);
    CHECK(step.i >= 2);
    CHECK(step.i < step.j);
    prev = step.mu;
  }
  // trace text has one line per step with the final mu value on the last line
  std::istringstream lines(traceToText(r));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == static_cast<int>(r.trace.size()));
}

TEST_CASE("greedy symmetrization on the order-16 code loop decreases mu") {
  SymplecticCubicSpace sp = SymplecticCubicSpace::zero(3);
  sp.setAlpha(0, 1, 2, 1);
  Quasigroup l = codeLoopFromSpace(sp);
  auto frattini = verbalSubloop(l, VerbalKind::frattini);
  REQUIRE(frattini.order() == 2);
  int h = frattini.posInParent()[1];
  Quasigroup nuc = centralPartSubloop(l, CentralKind::nucleus);
  GreedyResult r = greedySymmetrize(l, nuc, h);
  CHECK(r.mu <= muOf(l));
  for (const GreedyStep& step : r.trace) CHECK(step.mu >= 0);
  CHECK(r.loop.isLoop());
}
