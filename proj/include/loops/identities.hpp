#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loops/quasigroup.hpp"

namespace loops {

// Term over {mul, ldiv, rdiv, leftInv, rightInv} and variables x, y, z, u.
struct Term {
  char op = 0;   // '*', '\\', '/', 'l', 'r', or 'v' for a variable
  int var = -1;  // variable index when op == 'v'
  std::vector<Term> kids;
};

struct Identity {
  std::string id;
  int arity = 0;
  bool loopOnly = false;
  Term lhs, rhs;
};

// Every single-identity predicate of the library, each present exactly once.
const std::vector<Identity>& identityCatalogue();
const Identity* findIdentity(std::string_view id);

Term parsePrefixTerm(std::string_view text);
std::string termToPrefix(const Term& t);

// One line per identity: "id arity lhs-prefix = rhs-prefix".
std::string catalogueText();

// Evaluate the term under an assignment of relative positions to variables.
int evalTerm(const Quasigroup& q, const Term& t, const std::vector<int>& assignment);

}  // namespace loops
