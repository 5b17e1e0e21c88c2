#pragma once

#include <any>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "loops/perm.hpp"
#include "loops/table.hpp"

namespace loops {

// Memoized attributes with write-once semantics; first write wins, so
// idempotent recomputation is safe under concurrency.
class AttributeStore {
public:
  enum class Provenance { computed, deduced };

  bool has(const std::string& key) const {
    std::lock_guard lock(mu_);
    return map_.count(key) != 0;
  }

  template <class T>
  std::optional<T> tryGet(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return std::any_cast<T>(it->second.value);
  }

  template <class T>
  void set(const std::string& key, T value, Provenance prov = Provenance::computed) {
    std::lock_guard lock(mu_);
    map_.emplace(key, Entry{std::any(std::move(value)), prov});
  }

  std::optional<Provenance> provenance(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second.prov;
  }

  std::vector<std::string> keys() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [k, v] : map_) out.push_back(k);
    return out;
  }

private:
  struct Entry {
    std::any value;
    Provenance prov;
  };
  mutable std::mutex mu_;
  std::map<std::string, Entry> map_;
};

class Element;
class Quasigroup;

enum class Kind { quasigroup, loop };

// Internal: wrap sorted root positions as a subobject without materializing its table.
Quasigroup makeSubobject(const Quasigroup& root, std::vector<int> rootPositions, Kind kind);

// A quasigroup or loop: a handle onto an immutable table plus parent-embedding
// data and a memoizing attribute store. Copies share identity.
class Quasigroup {
public:
  Quasigroup() = default;

  static Quasigroup fromTable(CanonicalTable t, Kind kind);

  int order() const;
  bool isLoop() const;
  bool valid() const { return impl_ != nullptr; }

  // Relative Cayley table; for subobjects it is materialized on first request.
  const CanonicalTable& table() const;
  bool hasTableComputed() const;

  // Relative positions 1..order.
  int mul(int i, int j) const;
  int ldiv(int i, int j) const;  // unique z with i*z = j
  int rdiv(int i, int j) const;  // unique z with z*j = i

  bool isRoot() const;
  Quasigroup parent() const;  // the root ancestor (self if root)
  const std::vector<int>& posInParent() const;

  Element element(int relativePos) const;
  std::vector<Element> elements() const;
  // Relative position of a root position, or 0 if not present.
  int relativePosOf(int rootPos) const;

  AttributeStore& attrs() const;

  bool sameFamily(const Quasigroup& other) const;
  // Parent-and-position equality.
  bool operator==(const Quasigroup& other) const;

  std::string displayName() const;  // "<loop of order n>" style

private:
  friend class Element;
  friend Quasigroup makeSubobject(const Quasigroup& root, std::vector<int> rootPositions, Kind kind);
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Element of a quasigroup family, identified by its position in the root.
class Element {
public:
  Element() = default;
  Element(const Quasigroup& owner, int relativePos);

  int rootPos() const { return pos_; }
  Quasigroup root() const;

  Element operator*(const Element& y) const;
  Element leftDivide(const Element& y) const;   // this \ y
  Element rightDivide(const Element& y) const;  // this / y

  bool operator==(const Element& y) const;
  bool operator!=(const Element& y) const { return !(*this == y); }

private:
  friend class Quasigroup;
  void requireSameFamily(const Element& y) const;
  std::shared_ptr<Quasigroup::Impl> family_;
  int pos_ = 0;
};

// -- core operations ---------------------------------------------------------

Quasigroup makeQuasigroup(const RawTable& t, Kind kind);
Quasigroup makeQuasigroup(CanonicalTable t, Kind kind);

enum class Side { left, right };

// Left: y -> x*y (row x); right: y -> y*x (column x). Relative positions.
Permutation translation(const Quasigroup& q, Side side, int x);
std::vector<Permutation> section(const Quasigroup& q, Side side);

struct Inverses {
  int left = 0;
  int right = 0;
  std::optional<int> twoSided;
};
Inverses inversesOf(const Quasigroup& l, int x);

int elementOrderOf(const Quasigroup& l, int x);
int exponentOf(const Quasigroup& l);

int associatorOf(const Quasigroup& l, int x, int y, int z);
int commutatorOf(const Quasigroup& l, int x, int y);

Quasigroup principalIsotope(const Quasigroup& q, int f, int g);
Quasigroup asLoop(const Quasigroup& q);

// Closure of S (relative positions) under mul/ldiv/rdiv; the result's parent
// is q's root and its table is materialized only on demand.
Quasigroup subquasigroup(const Quasigroup& q, const std::vector<int>& s, Kind kind);
bool isSubquasigroup(const Quasigroup& q, const std::vector<int>& s);

std::vector<Quasigroup> allSubloops(const Quasigroup& l);

struct Cosets {
  std::vector<std::vector<int>> cosets;  // relative positions in l, each sorted
  std::vector<int> transversal;
};
Cosets rightCosets(const Quasigroup& l, const Quasigroup& s);

Quasigroup isomorphicCopyByPerm(const Quasigroup& q, const Permutation& p);
Quasigroup isomorphicCopyByNormalSubloop(const Quasigroup& l, const Quasigroup& s);

std::vector<int> generatorsSmallest(const Quasigroup& q);

Quasigroup directProduct(const std::vector<Quasigroup>& factors);

// Relative positions of s inside l's root coordinates and back.
std::vector<int> toRootPositions(const Quasigroup& q, const std::vector<int>& relative);

}  // namespace loops
