#include "loops/identities.hpp"

#include <map>
#include <sstream>

#include "loops/error.hpp"

namespace loops {

namespace {

constexpr std::string_view kVarNames = "xyzu";

Term parseTokens(std::istringstream& in) {
  std::string tok;
  if (!(in >> tok)) fail(Errc::UnknownIdentity, "truncated term");
  Term t;
  if (tok == "*" || tok == "\\" || tok == "/") {
    t.op = tok[0];
    t.kids.push_back(parseTokens(in));
    t.kids.push_back(parseTokens(in));
  } else if (tok == "linv" || tok == "rinv") {
    t.op = tok[0];
    t.kids.push_back(parseTokens(in));
  } else if (tok.size() == 1 && kVarNames.find(tok[0]) != std::string_view::npos) {
    t.op = 'v';
    t.var = static_cast<int>(kVarNames.find(tok[0]));
  } else {
    fail(Errc::UnknownIdentity, "bad term token: " + tok);
  }
  return t;
}

int termArity(const Term& t) {
  if (t.op == 'v') return t.var + 1;
  int a = 0;
  for (const auto& k : t.kids) a = std::max(a, termArity(k));
  return a;
}

bool termUsesInverse(const Term& t) {
  if (t.op == 'l' || t.op == 'r') return true;
  for (const auto& k : t.kids)
    if (termUsesInverse(k)) return true;
  return false;
}

struct Row {
  const char* id;
  bool loopOnly;
  const char* lhs;
  const char* rhs;
};

// clang-format off
const Row kRows[] = {
  {"associative",                    false, "* * x y z",        "* x * y z"},
  {"commutative",                    false, "* x y",            "* y x"},
  {"idempotent",                     false, "* x x",            "x"},
  {"unipotent",                      false, "* x x",            "* y y"},
  {"semisymmetric",                  false, "* * x y x",        "y"},
  {"leftDistributive",               false, "* x * y z",        "* * x y * x z"},
  {"rightDistributive",              false, "* * x y z",        "* * x z * y z"},
  {"entropic",                       false, "* * x y * z u",    "* * x z * y u"},
  {"flexible",                       false, "* x * y x",        "* * x y x"},
  {"leftAlternative",                false, "* * x x y",        "* x * x y"},
  {"rightAlternative",               false, "* x * y y",        "* * x y y"},
  {"extra",                          true,  "* x * y * z x",    "* * * x y z x"},
  {"moufang",                        true,  "* * x y * z x",    "* * x * y z x"},
  {"leftBol",                        true,  "* x * y * x z",    "* * x * y x z"},
  {"rightBol",                       true,  "* x * * y z y",    "* * * x y z y"},
  {"cLoop",                          true,  "* x * y * y z",    "* * * x y y z"},
  {"lcLoop",                         true,  "* * x x * y z",    "* * x * x y z"},
  {"rcLoop",                         true,  "* x * * y z z",    "* * x y * z z"},
  {"leftNuclearSquare",              true,  "* * x x * y z",    "* * * x x y z"},
  {"middleNuclearSquare",            true,  "* x * * y y z",    "* * x * y y z"},
  {"rightNuclearSquare",             true,  "* x * y * z z",    "* * x y * z z"},
  {"leftInverseProperty",            true,  "* linv x * x y",   "y"},
  {"rightInverseProperty",           true,  "* * y x rinv x",   "y"},
  {"weakInverseProperty",            true,  "* linv * x y x",   "linv y"},
  {"automorphicInverseProperty",     true,  "linv * x y",       "* linv x linv y"},
  {"antiautomorphicInverseProperty", true,  "linv * x y",       "* linv y linv x"},
  {"twosidedInverses",               true,  "linv x",           "rinv x"},
};
// clang-format on

}  // namespace

Term parsePrefixTerm(std::string_view text) {
  std::istringstream in{std::string(text)};
  Term t = parseTokens(in);
  std::string extra;
  if (in >> extra) fail(Errc::UnknownIdentity, "trailing term tokens: " + extra);
  return t;
}

std::string termToPrefix(const Term& t) {
  if (t.op == 'v') return std::string(1, kVarNames[t.var]);
  std::string head = t.op == 'l' ? "linv" : t.op == 'r' ? "rinv" : std::string(1, t.op);
  std::string out = head;
  for (const auto& k : t.kids) out += " " + termToPrefix(k);
  return out;
}

const std::vector<Identity>& identityCatalogue() {
  static const std::vector<Identity> cat = [] {
    std::vector<Identity> out;
    for (const Row& r : kRows) {
      Identity id;
      id.id = r.id;
      id.loopOnly = r.loopOnly;
      id.lhs = parsePrefixTerm(r.lhs);
      id.rhs = parsePrefixTerm(r.rhs);
      id.arity = std::max(termArity(id.lhs), termArity(id.rhs));
      out.push_back(std::move(id));
    }
    return out;
  }();
  return cat;
}

const Identity* findIdentity(std::string_view id) {
  for (const Identity& i : identityCatalogue())
    if (i.id == id) return &i;
  return nullptr;
}

std::string catalogueText() {
  std::string out;
  for (const Identity& i : identityCatalogue()) {
    out += i.id;
    out += " " + std::to_string(i.arity);
    out += " " + termToPrefix(i.lhs);
    out += " = " + termToPrefix(i.rhs);
    out += "\n";
  }
  return out;
}

int evalTerm(const Quasigroup& q, const Term& t, const std::vector<int>& assignment) {
  switch (t.op) {
    case 'v': return assignment[t.var];
    case '*': return q.mul(evalTerm(q, t.kids[0], assignment), evalTerm(q, t.kids[1], assignment));
    case '\\':
      return q.ldiv(evalTerm(q, t.kids[0], assignment), evalTerm(q, t.kids[1], assignment));
    case '/': return q.rdiv(evalTerm(q, t.kids[0], assignment), evalTerm(q, t.kids[1], assignment));
    case 'l': return q.rdiv(1, evalTerm(q, t.kids[0], assignment));  // linv(x) * x = 1
    case 'r': return q.ldiv(evalTerm(q, t.kids[0], assignment), 1);  // x * rinv(x) = 1
  }
  fail(Errc::UnknownIdentity, "malformed term");
}

}  // namespace loops
