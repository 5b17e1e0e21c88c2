#include <set>

#include "doctest.h"
#include "loops/perm.hpp"
#include "loops/permgroup.hpp"

using namespace loops;

TEST_CASE("composition is left to right") {
  Permutation p = Permutation::fromImages({2, 1, 3});  // (1 2)
  Permutation q = Permutation::fromImages({1, 3, 2});  // (2 3)
  // (p*q)(1) = q(p(1)) = q(2) = 3
  CHECK((p * q)(1) == 3);
  // (q*p)(1) = p(q(1)) = p(1) = 2
  CHECK((q * p)(1) == 2);
  CHECK((p * p).isIdentity());
  CHECK((p * p.inverse()).isIdentity());
}

TEST_CASE("fromImages validates bijectivity") {
  CHECK_THROWS_AS(Permutation::fromImages({1, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation::fromImages({0, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation::fromImages({1, 2, 4}), Error);
}

TEST_CASE("cycle strings") {
  CHECK(Permutation(4).cycleString() == "()");
  CHECK(Permutation::fromImages({2, 3, 1, 4}).cycleString() == "(1 2 3)");
  CHECK(Permutation::fromImages({2, 1, 4, 3}).cycleString() == "(1 2)(3 4)");
}

TEST_CASE("conjugate and commutator") {
  Permutation a = Permutation::fromImages({2, 3, 1});  // (1 2 3)
  Permutation b = Permutation::fromImages({2, 1, 3});  // (1 2)
  // (1 2 3)^(1 2) = (2 1 3) = (1 3 2) under image-of-point conjugation
  CHECK(conjugate(a, b) == Permutation::fromImages({3, 1, 2}));
  CHECK(commutator(a, a).isIdentity());
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("schreier-sims matches naive closure on S4 and A4") {
  std::vector<Permutation> s4gens = {Permutation::fromImages({2, 1, 3, 4}),
                                     Permutation::fromImages({2, 3, 4, 1})};
  PermGroup s4 = PermGroup::generated(4, s4gens);
  // oracle: breadth-first closure
  std::set<Permutation> all{Permutation(4)};
  std::vector<Permutation> frontier{Permutation(4)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : s4gens) {
        Permutation y = x * g;
        if (all.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  CHECK(all.size() == 24);
  CHECK(s4.order() == 24);
  for (const auto& x : all) CHECK(s4.contains(x));
  PermGroup a4 = s4.derivedSubgroup();
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::fromImages({2, 1, 3, 4})));
}

TEST_CASE("orbits and stabilizers") {
  PermGroup c4 = PermGroup::generated(4, {Permutation::fromImages({2, 3, 4, 1})});
  CHECK(c4.order() == 4);
  CHECK(c4.orbit(1) == std::vector<int>{1, 2, 3, 4});
  CHECK(c4.stabilizer(1).order() == 1);

  PermGroup s4 = PermGroup::generated(
      4, {Permutation::fromImages({2, 1, 3, 4}), Permutation::fromImages({2, 3, 4, 1})});
  PermGroup stab = s4.stabilizer(1);
  CHECK(stab.order() == 6);  // S3 on the remaining points
  CHECK(stab.orbit(1) == std::vector<int>{1});
}

TEST_CASE("primitivity and block systems") {
  // C4 = <(1 2 3 4)> is imprimitive with blocks {1,3},{2,4}
  PermGroup c4 = PermGroup::generated(4, {Permutation::fromImages({2, 3, 4, 1})});
  auto bs = c4.primitivity();
  CHECK_FALSE(bs.primitive);
  CHECK(bs.blocks == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  PermGroup s4 = PermGroup::generated(
      4, {Permutation::fromImages({2, 1, 3, 4}), Permutation::fromImages({2, 3, 4, 1})});
  CHECK(s4.primitivity().primitive);

  PermGroup intrans = PermGroup::generated(4, {Permutation::fromImages({2, 1, 3, 4})});
  CHECK_THROWS_AS(intrans.primitivity(), Error);
}

TEST_CASE("series and solvability") {
  PermGroup s4 = PermGroup::generated(
      4, {Permutation::fromImages({2, 1, 3, 4}), Permutation::fromImages({2, 3, 4, 1})});
  auto series = s4.derivedSeries();
  std::vector<std::uint64_t> orders;
  for (const auto& g : series) orders.push_back(g.order());
  CHECK(orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(s4.isSolvable());
  CHECK_FALSE(s4.isNilpotent());

  PermGroup a5 = PermGroup::generated(
      5, {Permutation::fromImages({2, 3, 1, 4, 5}), Permutation::fromImages({1, 2, 4, 5, 3})});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.isSolvable());

  PermGroup c4 = PermGroup::generated(4, {Permutation::fromImages({2, 3, 4, 1})});
  CHECK(c4.isNilpotent());
  CHECK(c4.isAbelian());
  CHECK_FALSE(s4.isAbelian());
}

TEST_CASE("normal closure") {
  PermGroup s4 = PermGroup::generated(
      4, {Permutation::fromImages({2, 1, 3, 4}), Permutation::fromImages({2, 3, 4, 1})});
  // normal closure of a double transposition is the Klein four group
  PermGroup v4 = s4.normalClosure({Permutation::fromImages({2, 1, 4, 3})});
  CHECK(v4.order() == 4);
  // normal closure of a transposition is everything
  CHECK(s4.normalClosure({Permutation::fromImages({2, 1, 3, 4})}).order() == 24);
}
