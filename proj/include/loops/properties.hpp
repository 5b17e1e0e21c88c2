#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/quasigroup.hpp"

namespace loops {

// Direct evaluation of a named identity from the catalogue. Results are cached
// on the object (with computed provenance) together with a counterexample
// assignment when the identity fails.
bool satisfiesIdentity(const Quasigroup& q, const std::string& id);

// Direct evaluation of any named property: catalogue identities plus the
// composite predicates (powerAssociative, diassociative, lcc, ...).
bool propertyPredicate(const Quasigroup& q, const std::string& prop);

// All property names propertyPredicate accepts, catalogue identities first.
std::vector<std::string> propertyNames();

bool isLoopOnlyProperty(const std::string& prop);

struct Rule {
  std::vector<std::string> premises;
  std::string conclusion;
};
const std::vector<Rule>& ruleSet();

// Fixed-point closure of the currently known true flags under the rule set.
// Deduced flags carry deduced provenance and never override computed ones.
void deduceProperties(const Quasigroup& q);

// Cached flag state without triggering any evaluation.
std::optional<bool> knownFlag(const Quasigroup& q, const std::string& prop);
std::optional<AttributeStore::Provenance> flagProvenance(const Quasigroup& q,
                                                         const std::string& prop);
// Whether a direct (exhaustive) evaluation of this property ever ran on q.
bool wasDirectlyEvaluated(const Quasigroup& q, const std::string& prop);

// Counterexample assignment recorded by the last failing direct evaluation.
std::optional<std::vector<int>> counterexampleFor(const Quasigroup& q, const std::string& prop);

}  // namespace loops
