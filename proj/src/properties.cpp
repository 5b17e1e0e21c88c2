#include "loops/properties.hpp"

#include <algorithm>
#include <set>

#include "loops/error.hpp"
#include "loops/identities.hpp"

namespace loops {

namespace {

const std::vector<std::string>& compositeNames() {
  static const std::vector<std::string> names = {
      "powerAssociative", "diassociative",  "alternative",
      "inverseProperty",  "distributive",   "totallySymmetric",
      "steinerQuasigroup", "leftBruck",     "rightBruck",
      "lcc",              "rcc",            "cc",
      "leftPowerAlternative", "rightPowerAlternative", "powerAlternative",
  };
  return names;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& conjunctions() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"alternative", {"leftAlternative", "rightAlternative"}},
      {"inverseProperty", {"leftInverseProperty", "rightInverseProperty"}},
      {"distributive", {"leftDistributive", "rightDistributive"}},
      {"totallySymmetric", {"semisymmetric", "commutative"}},
      {"steinerQuasigroup", {"idempotent", "semisymmetric", "commutative"}},
      {"leftBruck", {"leftBol", "automorphicInverseProperty"}},
      {"rightBruck", {"rightBol", "automorphicInverseProperty"}},
      {"cc", {"lcc", "rcc"}},
      {"powerAlternative", {"leftPowerAlternative", "rightPowerAlternative"}},
  };
  return table;
}

void recordFlag(const Quasigroup& q, const std::string& name, bool value,
                AttributeStore::Provenance prov) {
  q.attrs().set("flag:" + name, value, prov);
}

void markDirect(const Quasigroup& q, const std::string& name) {
  q.attrs().set("direct:" + name, true);
}

bool subTableAssociative(const Quasigroup& sub) {
  int m = sub.order();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        if (sub.mul(a, sub.mul(b, c)) != sub.mul(sub.mul(a, b), c)) return false;
  return true;
}

bool evalPowerAssociative(const Quasigroup& q) {
  for (int x = 1; x <= q.order(); ++x)
    if (!subTableAssociative(subquasigroup(q, {x}, Kind::quasigroup))) return false;
  return true;
}

bool evalDiassociative(const Quasigroup& q) {
  for (int x = 1; x <= q.order(); ++x)
    for (int y = x; y <= q.order(); ++y)
      if (!subTableAssociative(subquasigroup(q, {x, y}, Kind::quasigroup))) return false;
  return true;
}

bool evalConjugacyClosed(const Quasigroup& l, Side side) {
  auto sec = section(l, side);
  std::set<Permutation> translations(sec.begin(), sec.end());
  for (const auto& tx : sec)
    for (const auto& ty : sec)
      if (!translations.count(tx.inverse() * ty * tx)) return false;
  return true;
}

bool evalPowerAlternative(const Quasigroup& l, Side side) {
  int n = l.order();
  for (int x = 1; x <= n; ++x)
    if (!subTableAssociative(subquasigroup(l, {x}, Kind::loop)))
      fail(Errc::NotPowerAssociative, "position " + std::to_string(x) +
                                          " does not generate a group");
  for (int x = 1; x <= n; ++x) {
    int ord = elementOrderOf(l, x);
    std::vector<int> pow(ord);  // pow[k] = x^k, pow[0] = 1
    pow[0] = 1;
    for (int k = 1; k < ord; ++k) pow[k] = l.mul(x, pow[k - 1]);
    for (int a = 0; a < ord; ++a)
      for (int b = 0; b < ord; ++b) {
        int ab = pow[(a + b) % ord];
        for (int y = 1; y <= n; ++y) {
          bool ok = side == Side::left
                        ? l.mul(pow[a], l.mul(pow[b], y)) == l.mul(ab, y)
                        : l.mul(l.mul(y, pow[a]), pow[b]) == l.mul(y, ab);
          if (!ok) return false;
        }
      }
  }
  return true;
}

bool evaluateDirect(const Quasigroup& q, const std::string& prop);

bool evalConjunction(const Quasigroup& q, const std::vector<std::string>& parts) {
  bool ok = true;
  for (const auto& part : parts)
    if (!evaluateDirect(q, part)) ok = false;  // evaluate all parts; each caches itself
  return ok;
}

bool evaluateDirect(const Quasigroup& q, const std::string& prop) {
  if (auto cached = q.attrs().tryGet<bool>("flag:" + prop)) return *cached;
  if (isLoopOnlyProperty(prop) && !q.isLoop())
    fail(Errc::LoopRequired, "property " + prop + " is defined for loops");

  if (const Identity* id = findIdentity(prop)) {
    int n = q.order();
    std::vector<int> assign(4, 1);
    bool ok = true;
    std::vector<int> cex;
    auto scan = [&](auto&& self, int depth) -> bool {
      if (depth == id->arity) {
        if (evalTerm(q, id->lhs, assign) != evalTerm(q, id->rhs, assign)) {
          cex.assign(assign.begin(), assign.begin() + id->arity);
          return false;
        }
        return true;
      }
      for (int v = 1; v <= n; ++v) {
        assign[depth] = v;
        if (!self(self, depth + 1)) return false;
      }
      return true;
    };
    ok = scan(scan, 0);
    markDirect(q, prop);
    recordFlag(q, prop, ok, AttributeStore::Provenance::computed);
    if (!ok) q.attrs().set("cex:" + prop, cex);
    return ok;
  }

  for (const auto& [name, parts] : conjunctions())
    if (name == prop) {
      bool ok = evalConjunction(q, parts);
      markDirect(q, prop);
      recordFlag(q, prop, ok, AttributeStore::Provenance::computed);
      return ok;
    }

  bool ok;
  if (prop == "powerAssociative") ok = evalPowerAssociative(q);
  else if (prop == "diassociative") ok = evalDiassociative(q);
  else if (prop == "lcc") ok = evalConjugacyClosed(q, Side::left);
  else if (prop == "rcc") ok = evalConjugacyClosed(q, Side::right);
  else if (prop == "leftPowerAlternative") ok = evalPowerAlternative(q, Side::left);
  else if (prop == "rightPowerAlternative") ok = evalPowerAlternative(q, Side::right);
  else fail(Errc::UnknownProperty, prop);
  markDirect(q, prop);
  recordFlag(q, prop, ok, AttributeStore::Provenance::computed);
  return ok;
}

}  // namespace

bool satisfiesIdentity(const Quasigroup& q, const std::string& id) {
  if (!findIdentity(id)) fail(Errc::UnknownIdentity, id);
  return evaluateDirect(q, id);
}

bool propertyPredicate(const Quasigroup& q, const std::string& prop) {
  if (!findIdentity(prop) &&
      std::find(compositeNames().begin(), compositeNames().end(), prop) == compositeNames().end())
    fail(Errc::UnknownProperty, prop);
  return evaluateDirect(q, prop);
}

std::vector<std::string> propertyNames() {
  std::vector<std::string> out;
  for (const auto& id : identityCatalogue()) out.push_back(id.id);
  for (const auto& name : compositeNames()) out.push_back(name);
  return out;
}

bool isLoopOnlyProperty(const std::string& prop) {
  if (const Identity* id = findIdentity(prop)) return id->loopOnly;
  static const std::set<std::string> loopOnly = {
      "inverseProperty", "leftBruck", "rightBruck", "lcc", "rcc", "cc",
      "leftPowerAlternative", "rightPowerAlternative", "powerAlternative"};
  return loopOnly.count(prop) != 0;
}

const std::vector<Rule>& ruleSet() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> r;
    // Properties that hold in every group (equivalently, every associative loop
    // or quasigroup where the property is defined).
    for (const char* c :
         {"extra", "cLoop", "moufang", "rcLoop", "lcLoop", "rightBol", "leftBol", "flexible",
          "leftAlternative", "rightAlternative", "alternative", "leftNuclearSquare",
          "middleNuclearSquare", "rightNuclearSquare", "leftInverseProperty",
          "rightInverseProperty", "inverseProperty", "twosidedInverses", "weakInverseProperty",
          "antiautomorphicInverseProperty", "powerAssociative", "diassociative", "lcc", "rcc",
          "cc", "leftPowerAlternative", "rightPowerAlternative", "powerAlternative"})
      r.push_back({{"associative"}, c});
    r.push_back({{"associative", "commutative"}, "entropic"});
    r.push_back({{"associative", "commutative"}, "automorphicInverseProperty"});

    r.push_back({{"extra"}, "moufang"});
    r.push_back({{"cc", "moufang"}, "extra"});
    r.push_back({{"moufang"}, "leftBol"});
    r.push_back({{"moufang"}, "rightBol"});
    r.push_back({{"moufang"}, "flexible"});
    r.push_back({{"moufang"}, "diassociative"});
    r.push_back({{"leftBol", "rightBol"}, "moufang"});
    r.push_back({{"leftBol", "commutative"}, "moufang"});
    r.push_back({{"leftBol"}, "leftAlternative"});
    r.push_back({{"leftBol"}, "leftPowerAlternative"});
    r.push_back({{"rightBol"}, "rightAlternative"});
    r.push_back({{"rightBol"}, "rightPowerAlternative"});

    r.push_back({{"diassociative"}, "powerAssociative"});
    r.push_back({{"diassociative"}, "alternative"});
    r.push_back({{"diassociative"}, "flexible"});
    r.push_back({{"diassociative"}, "inverseProperty"});
    r.push_back({{"diassociative"}, "powerAlternative"});

    r.push_back({{"leftAlternative", "rightAlternative"}, "alternative"});
    r.push_back({{"alternative"}, "leftAlternative"});
    r.push_back({{"alternative"}, "rightAlternative"});
    r.push_back({{"leftPowerAlternative", "rightPowerAlternative"}, "powerAlternative"});
    r.push_back({{"powerAlternative"}, "leftPowerAlternative"});
    r.push_back({{"powerAlternative"}, "rightPowerAlternative"});
    r.push_back({{"leftPowerAlternative"}, "leftAlternative"});
    r.push_back({{"leftPowerAlternative"}, "powerAssociative"});
    r.push_back({{"rightPowerAlternative"}, "rightAlternative"});
    r.push_back({{"rightPowerAlternative"}, "powerAssociative"});

    r.push_back({{"leftInverseProperty", "rightInverseProperty"}, "inverseProperty"});
    r.push_back({{"inverseProperty"}, "leftInverseProperty"});
    r.push_back({{"inverseProperty"}, "rightInverseProperty"});
    r.push_back({{"inverseProperty"}, "twosidedInverses"});
    r.push_back({{"inverseProperty"}, "antiautomorphicInverseProperty"});
    r.push_back({{"antiautomorphicInverseProperty"}, "twosidedInverses"});
    r.push_back({{"commutative"}, "twosidedInverses"});

    r.push_back({{"leftDistributive", "rightDistributive"}, "distributive"});
    r.push_back({{"distributive"}, "leftDistributive"});
    r.push_back({{"distributive"}, "rightDistributive"});

    r.push_back({{"semisymmetric", "commutative"}, "totallySymmetric"});
    r.push_back({{"totallySymmetric"}, "semisymmetric"});
    r.push_back({{"totallySymmetric"}, "commutative"});
    r.push_back({{"totallySymmetric", "idempotent"}, "steinerQuasigroup"});
    r.push_back({{"steinerQuasigroup"}, "totallySymmetric"});
    r.push_back({{"steinerQuasigroup"}, "idempotent"});

    r.push_back({{"lcc", "rcc"}, "cc"});
    r.push_back({{"cc"}, "lcc"});
    r.push_back({{"cc"}, "rcc"});
    return r;
  }();
  return rules;
}

void deduceProperties(const Quasigroup& q) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& rule : ruleSet()) {
      if (knownFlag(q, rule.conclusion)) continue;
      if (isLoopOnlyProperty(rule.conclusion) && !q.isLoop()) continue;
      bool fire = true;
      for (const auto& p : rule.premises) {
        auto v = knownFlag(q, p);
        if (!v || !*v) {
          fire = false;
          break;
        }
      }
      if (fire) {
        recordFlag(q, rule.conclusion, true, AttributeStore::Provenance::deduced);
        changed = true;
      }
    }
  }
}

std::optional<bool> knownFlag(const Quasigroup& q, const std::string& prop) {
  return q.attrs().tryGet<bool>("flag:" + prop);
}

std::optional<AttributeStore::Provenance> flagProvenance(const Quasigroup& q,
                                                         const std::string& prop) {
  return q.attrs().provenance("flag:" + prop);
}

bool wasDirectlyEvaluated(const Quasigroup& q, const std::string& prop) {
  return q.attrs().has("direct:" + prop);
}

std::optional<std::vector<int>> counterexampleFor(const Quasigroup& q, const std::string& prop) {
  return q.attrs().tryGet<std::vector<int>>("cex:" + prop);
}

}  // namespace loops
