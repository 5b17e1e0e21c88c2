#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "loops/codeloops.hpp"
#include "loops/isomorphism.hpp"
#include "loops/properties.hpp"
#include "loops/structure.hpp"

using namespace loops;
using namespace testutil;

namespace {

SymplecticCubicSpace randomSpace(int n, std::mt19937& rng) {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(n);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < n; ++i) s.setSigma(i, bit(rng));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.setKappa(i, j, bit(rng));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) s.setAlpha(i, j, k, bit(rng));
  return s;
}

bool sameSpace(const SymplecticCubicSpace& a, const SymplecticCubicSpace& b) {
  return a.n == b.n && a.sigma == b.sigma && a.kappa == b.kappa && a.alpha == b.alpha;
}

}  // namespace

TEST_CASE("space text roundtrip and parse errors") {
  std::mt19937 rng(3);
  for (int n : {1, 2, 3, 4}) {
    SymplecticCubicSpace s = randomSpace(n, rng);
    CHECK(sameSpace(parseSpace(spaceToText(s)), s));
  }
  // comments and blank lines are fine
  SymplecticCubicSpace s = parseSpace("# comment\nn 3\n\nsigma 2\nkappa 1 3\nalpha 1 2 3\n");
  CHECK(s.sigmaAt(1) == 1);
  CHECK(s.kappaAt(0, 2) == 1);
  CHECK(s.kappaAt(2, 0) == 1);  // symmetric access
  CHECK(s.alphaAt(2, 1, 0) == 1);
  CHECK(s.alphaAt(0, 0, 1) == 0);  // repeated index
  for (const char* bad : {"sigma 1", "n 3\nsigma 0", "n 3\nsigma 4", "n 3\nkappa 2 2",
                          "n 3\nkappa 3 1", "n 3\nalpha 1 2", "n 3\nbogus 1", "n 0"}) {
    try {
      parseSpace(bad);
      FAIL_CHECK("no throw for: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidSpace);
    }
  }
}

TEST_CASE("induced forms satisfy the defining expansion identities") {
  std::mt19937 rng(5);
  for (int n : {2, 3, 4}) {
    SymplecticCubicSpace s = randomSpace(n, rng);
    std::uniform_int_distribution<std::uint32_t> vec(0, (1u << n) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t u = vec(rng), v = vec(rng), w = vec(rng);
      CHECK(evalSigma(s, u ^ v) ==
            ((evalSigma(s, u) + evalSigma(s, v) + evalKappa(s, u, v)) & 1));
      CHECK(evalKappa(s, u ^ v, w) ==
            ((evalKappa(s, u, w) + evalKappa(s, v, w) + evalAlpha(s, u, v, w)) & 1));
      CHECK(evalKappa(s, u, u) == 0);
      CHECK(evalAlpha(s, u, u, w) == 0);
      CHECK(evalAlpha(s, u, v, w) == evalAlpha(s, v, w, u));
    }
  }
}

TEST_CASE("zero spaces give elementary abelian groups") {
  for (int n : {1, 2, 3}) {
    Quasigroup l = codeLoopFromSpace(SymplecticCubicSpace::zero(n));
    CHECK(l.order() == (1 << (n + 1)));
    CHECK(satisfiesIdentity(l, "associative"));
    CHECK(satisfiesIdentity(l, "commutative"));
    CHECK(exponentOf(l) == 2);
  }
}

TEST_CASE("sigma-only space of dimension one gives Z4") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(1);
  s.setSigma(0, 1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(l.order() == 4);
  CHECK(isomorphismBetween(l, cyclic(4)).has_value());
}

TEST_CASE("an alpha constant produces a nonassociative Moufang loop") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(3);
  s.setAlpha(0, 1, 2, 1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(l.order() == 16);
  CHECK_FALSE(satisfiesIdentity(l, "associative"));
  CHECK(satisfiesIdentity(l, "moufang"));
  CHECK(nilpotencyClassOf(l) == 2);
  CHECK(verbalSubloop(l, VerbalKind::frattini).order() == 2);
}

TEST_CASE("structure constants are recovered from the loop") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    SymplecticCubicSpace s = randomSpace(3, rng);
    // a zero space gives an elementary abelian group with trivial Frattini
    // subloop, outside the scope of the extraction; force a nonzero constant
    s.setAlpha(0, 1, 2, 1);
    Quasigroup l = codeLoopFromSpace(s);
    CodeLoopBasis back = spaceFromCodeLoop(l);
    CHECK(back.space.n == 3);
    CHECK(back.basis.size() == 3);
    // the recovered space regenerates an isomorphic loop
    Quasigroup again = codeLoopFromSpace(back.space);
    CHECK(isomorphismBetween(l, again).has_value());
    // and a basis realizing the original constants exists in the loop
    std::vector<int> basis = findBasisRealizing(l, s);
    REQUIRE(basis.size() == 3);
  }
}

TEST_CASE("findBasisRealizing rejects impossible spaces") {
  // a nonassociative loop has no basis reading off the zero space
  SymplecticCubicSpace zero = SymplecticCubicSpace::zero(3);
  SymplecticCubicSpace withAlpha = zero;
  withAlpha.setAlpha(0, 1, 2, 1);
  CHECK(findBasisRealizing(codeLoopFromSpace(withAlpha), zero).empty());
}

TEST_CASE("spaceFromCodeLoop validates its input") {
  try {
    spaceFromCodeLoop(cyclic(6));
    FAIL_CHECK("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPowerOfTwo);
  }
  try {
    // elementary abelian: Frattini subloop is trivial, not of order two
    spaceFromCodeLoop(codeLoopFromSpace(SymplecticCubicSpace::zero(2)));
    FAIL_CHECK("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSmallFrattini);
  }
  // D8 is a group code loop: sigma reads squares, kappa reads commutators
  CodeLoopBasis d8 = spaceFromCodeLoop(dihedral8());
  CHECK(d8.space.n == 2);
  CHECK(isomorphismBetween(codeLoopFromSpace(d8.space), dihedral8()).has_value());
}

TEST_CASE("triality group arithmetic is consistent") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(2);
  s.setSigma(0, 1);
  s.setKappa(0, 1, 1);
  TrialityGroup g(s);
  TrialityElement e = g.identity();
  TrialityElement rho = g.rho(), tau = g.tau();
  CHECK(g.mul(g.mul(rho, rho), rho) == e);
  CHECK(g.mul(tau, tau) == e);
  CHECK(g.mul(g.inverse(rho), rho) == e);
  // conjugation: x^(yz) = (x^y)^z on a few elements
  TrialityElement x = g.gen('g', 0), y = g.gen('f', 1), z = g.mul(tau, g.gen('h', 0));
  CHECK(g.conj(x, g.mul(y, z)) == g.conj(g.conj(x, y), z));
}

TEST_CASE("degenerate dimension one is accepted end to end") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(l.order() == 4);
  CHECK(satisfiesIdentity(l, "associative"));
  s.setSigma(0, 1);
  CodeLoopBasis back = spaceFromCodeLoop(codeLoopFromSpace(s));
  CHECK(back.space.sigmaAt(0) == 1);
}
