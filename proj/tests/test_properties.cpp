#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "loops/codeloops.hpp"
#include "loops/identities.hpp"
#include "loops/properties.hpp"

using namespace loops;
using namespace testutil;

TEST_CASE("identity catalogue parses and serializes") {
  CHECK(identityCatalogue().size() == 27);
  for (const Identity& id : identityCatalogue()) {
    CHECK(parsePrefixTerm(termToPrefix(id.lhs)).op == id.lhs.op);
    CHECK(termToPrefix(parsePrefixTerm(termToPrefix(id.rhs))) == termToPrefix(id.rhs));
    CHECK(id.arity >= 1);
    CHECK(id.arity <= 4);
  }
  std::istringstream lines(catalogueText());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 27);
  CHECK(findIdentity("moufang") != nullptr);
  CHECK(findIdentity("nosuch") == nullptr);
  CHECK_THROWS_AS(parsePrefixTerm("* x"), Error);
  CHECK_THROWS_AS(parsePrefixTerm("* x y z"), Error);
}

TEST_CASE("groups satisfy the group-valid identities") {
  Quasigroup z4 = cyclic(4);
  for (const char* id : {"associative", "commutative", "flexible", "moufang", "leftBol",
                         "extra", "leftInverseProperty", "twosidedInverses", "entropic"})
    CHECK(satisfiesIdentity(z4, id));
  CHECK_FALSE(satisfiesIdentity(z4, "idempotent"));
  Quasigroup s3 = sym3();
  CHECK(satisfiesIdentity(s3, "associative"));
  CHECK_FALSE(satisfiesIdentity(s3, "commutative"));
  CHECK_FALSE(satisfiesIdentity(s3, "entropic"));
}

TEST_CASE("N5 satisfies only the automorphic inverse property") {
  Quasigroup q = n5();
  for (const Identity& id : identityCatalogue()) {
    bool expected = id.id == "automorphicInverseProperty";
    CHECK(satisfiesIdentity(q, id.id) == expected);
  }
  CHECK_FALSE(propertyPredicate(q, "powerAssociative"));
  CHECK_FALSE(propertyPredicate(q, "lcc"));
}

TEST_CASE("failing identities record a verifiable counterexample") {
  Quasigroup q = n5();
  CHECK_FALSE(satisfiesIdentity(q, "associative"));
  auto cex = counterexampleFor(q, "associative");
  REQUIRE(cex.has_value());
  REQUIRE(cex->size() == 3);
  const auto& a = *cex;
  CHECK(q.mul(q.mul(a[0], a[1]), a[2]) != q.mul(a[0], q.mul(a[1], a[2])));
}

TEST_CASE("steiner quasigroup predicates") {
  Quasigroup s = steiner3();
  CHECK(satisfiesIdentity(s, "idempotent"));
  CHECK(satisfiesIdentity(s, "semisymmetric"));
  CHECK(satisfiesIdentity(s, "commutative"));
  CHECK(propertyPredicate(s, "totallySymmetric"));
  CHECK(propertyPredicate(s, "steinerQuasigroup"));
  CHECK_FALSE(propertyPredicate(cyclic(3), "steinerQuasigroup"));
}

TEST_CASE("loop-only identities require loops") {
  Quasigroup s = steiner3();
  CHECK_THROWS_AS(satisfiesIdentity(s, "moufang"), Error);
  CHECK_THROWS_AS(propertyPredicate(s, "lcc"), Error);
  CHECK_THROWS_AS(satisfiesIdentity(s, "nosuch"), Error);
  CHECK_THROWS_AS(propertyPredicate(s, "nosuch"), Error);
}

TEST_CASE("power alternative laws on groups and failure on N5") {
  CHECK(propertyPredicate(cyclic(6), "leftPowerAlternative"));
  CHECK(propertyPredicate(dihedral8(), "powerAlternative"));
  // N5 has an element generating a nonassociative subloop
  Quasigroup q = n5();
  CHECK_THROWS_AS(propertyPredicate(q, "rightPowerAlternative"), Error);
}

TEST_CASE("the order-16 code loop is Moufang but not a group") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(3);
  s.setAlpha(0, 1, 2, 1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(l.order() == 16);
  CHECK_FALSE(satisfiesIdentity(l, "associative"));
  CHECK(satisfiesIdentity(l, "moufang"));
  CHECK(propertyPredicate(l, "diassociative"));
  CHECK(propertyPredicate(l, "alternative"));
}

TEST_CASE("deduction marks flags with deduced provenance and no direct scan") {
  SymplecticCubicSpace s = SymplecticCubicSpace::zero(3);
  s.setAlpha(0, 1, 2, 1);
  Quasigroup l = codeLoopFromSpace(s);
  CHECK(satisfiesIdentity(l, "leftBol"));
  CHECK(satisfiesIdentity(l, "rightBol"));
  CHECK_FALSE(knownFlag(l, "moufang").has_value());
  deduceProperties(l);
  auto flag = knownFlag(l, "moufang");
  REQUIRE(flag.has_value());
  CHECK(*flag);
  CHECK(flagProvenance(l, "moufang") == AttributeStore::Provenance::deduced);
  CHECK_FALSE(wasDirectlyEvaluated(l, "moufang"));
  // deduction cascades: Moufang -> flexible, diassociative -> powerAssociative
  CHECK(knownFlag(l, "flexible") == std::optional<bool>(true));
  CHECK(knownFlag(l, "powerAssociative") == std::optional<bool>(true));
  // a fresh direct evaluation agrees
  Quasigroup fresh = codeLoopFromSpace(s);
  CHECK(satisfiesIdentity(fresh, "moufang"));
  CHECK(wasDirectlyEvaluated(fresh, "moufang"));
}

TEST_CASE("deduction never overrides computed flags") {
  Quasigroup q = n5();
  CHECK(satisfiesIdentity(q, "automorphicInverseProperty"));
  CHECK_FALSE(satisfiesIdentity(q, "commutative"));
  deduceProperties(q);
  CHECK(knownFlag(q, "commutative") == std::optional<bool>(false));
  CHECK(flagProvenance(q, "commutative") == AttributeStore::Provenance::computed);
}

TEST_CASE("rule premises must all be known true to fire") {
  Quasigroup z4 = cyclic(4);
  CHECK(satisfiesIdentity(z4, "leftBol"));
  deduceProperties(z4);
  // leftBol alone does not deduce moufang; commutative is unknown, not false
  CHECK_FALSE(knownFlag(z4, "moufang").has_value());
  CHECK(satisfiesIdentity(z4, "commutative"));
  deduceProperties(z4);
  CHECK(knownFlag(z4, "moufang") == std::optional<bool>(true));
  CHECK(flagProvenance(z4, "moufang") == AttributeStore::Provenance::deduced);
}
