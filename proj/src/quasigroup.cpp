#include "loops/quasigroup.hpp"

#include <algorithm>

namespace loops {

struct Quasigroup::Impl {
  std::shared_ptr<Impl> root;   // null when this object is the root
  std::vector<int> posInParent; // root positions, strictly increasing
  bool loop = false;

  mutable std::mutex mu;
  mutable std::optional<CanonicalTable> table;
  mutable std::optional<CanonicalTable> ldivT;
  mutable std::optional<CanonicalTable> rdivT;
  mutable AttributeStore attrs;

  const CanonicalTable& relativeTable() const {
    std::lock_guard lock(mu);
    if (!table) {
      // materialize against the root table
      const CanonicalTable& rt = *root->table;
      int n = static_cast<int>(posInParent.size());
      std::vector<int> rel(rt.order() + 1, 0);
      for (int i = 0; i < n; ++i) rel[posInParent[i]] = i + 1;
      std::vector<int> cells(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int prod = rt.at(posInParent[i], posInParent[j]);
          cells[i * n + j] = rel[prod];  // 0 would mean not closed; construction guarantees closure
        }
      table = CanonicalTable(n, std::move(cells));
    }
    return *table;
  }

  const CanonicalTable& leftDivTable() const {
    const CanonicalTable& t = relativeTable();
    std::lock_guard lock(mu);
    if (!ldivT) {
      int n = t.order();
      CanonicalTable d(n, std::vector<int>(n * n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) d.set(i, t.at(i, j), j);  // i*j = v  =>  i \ v = j
      ldivT = std::move(d);
    }
    return *ldivT;
  }

  const CanonicalTable& rightDivTable() const {
    const CanonicalTable& t = relativeTable();
    std::lock_guard lock(mu);
    if (!rdivT) {
      int n = t.order();
      CanonicalTable d(n, std::vector<int>(n * n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) d.set(t.at(i, j), j, i);  // i*j = v  =>  v / j = i
      rdivT = std::move(d);
    }
    return *rdivT;
  }
};

Quasigroup Quasigroup::fromTable(CanonicalTable t, Kind kind) {
  if (!t.isLatin()) fail(Errc::NotLatin, "table is not a Latin square");
  if (kind == Kind::loop && !t.hasNeutralAt(1))
    fail(Errc::NotNormalized, "loop table must have the neutral element at position 1");
  Quasigroup q;
  q.impl_ = std::make_shared<Impl>();
  q.impl_->loop = (kind == Kind::loop);
  int n = t.order();
  q.impl_->posInParent.resize(n);
  for (int i = 0; i < n; ++i) q.impl_->posInParent[i] = i + 1;
  q.impl_->table = std::move(t);
  return q;
}

Quasigroup makeSubobject(const Quasigroup& root, std::vector<int> rootPositions, Kind kind) {
  Quasigroup q;
  q.impl_ = std::make_shared<Quasigroup::Impl>();
  q.impl_->root = root.impl_;
  q.impl_->loop = (kind == Kind::loop);
  q.impl_->posInParent = std::move(rootPositions);
  return q;
}

int Quasigroup::order() const { return static_cast<int>(impl_->posInParent.size()); }
bool Quasigroup::isLoop() const { return impl_->loop; }
bool Quasigroup::isRoot() const { return impl_->root == nullptr; }

const CanonicalTable& Quasigroup::table() const { return impl_->relativeTable(); }

bool Quasigroup::hasTableComputed() const {
  std::lock_guard lock(impl_->mu);
  return impl_->table.has_value();
}

int Quasigroup::mul(int i, int j) const { return impl_->relativeTable().at(i, j); }
int Quasigroup::ldiv(int i, int j) const { return impl_->leftDivTable().at(i, j); }
int Quasigroup::rdiv(int i, int j) const { return impl_->rightDivTable().at(i, j); }

Quasigroup Quasigroup::parent() const {
  if (isRoot()) return *this;
  Quasigroup p;
  p.impl_ = impl_->root;
  return p;
}

const std::vector<int>& Quasigroup::posInParent() const { return impl_->posInParent; }

Element Quasigroup::element(int relativePos) const { return Element(*this, relativePos); }

std::vector<Element> Quasigroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (int i = 1; i <= order(); ++i) out.push_back(element(i));
  return out;
}

int Quasigroup::relativePosOf(int rootPos) const {
  const auto& pos = impl_->posInParent;
  auto it = std::lower_bound(pos.begin(), pos.end(), rootPos);
  if (it == pos.end() || *it != rootPos) return 0;
  return static_cast<int>(it - pos.begin()) + 1;
}

AttributeStore& Quasigroup::attrs() const { return impl_->attrs; }

bool Quasigroup::sameFamily(const Quasigroup& other) const {
  auto rootOf = [](const std::shared_ptr<Impl>& i) { return i->root ? i->root : i; };
  return rootOf(impl_) == rootOf(other.impl_);
}

bool Quasigroup::operator==(const Quasigroup& other) const {
  return sameFamily(other) && impl_->posInParent == other.impl_->posInParent;
}

std::string Quasigroup::displayName() const {
  return std::string("<") + (isLoop() ? "loop" : "quasigroup") + " of order " +
         std::to_string(order()) + ">";
}

Element::Element(const Quasigroup& owner, int relativePos) {
  if (relativePos < 1 || relativePos > owner.order())
    fail(Errc::PointOutOfRange, "element position " + std::to_string(relativePos));
  family_ = owner.isRoot() ? owner.impl_ : owner.impl_->root;
  pos_ = owner.posInParent()[relativePos - 1];
}

Quasigroup Element::root() const {
  Quasigroup q;
  q.impl_ = family_;
  return q;
}

void Element::requireSameFamily(const Element& y) const {
  if (family_ != y.family_) fail(Errc::ForeignElement, "elements belong to different families");
}

Element Element::operator*(const Element& y) const {
  requireSameFamily(y);
  Element out = *this;
  out.pos_ = family_->relativeTable().at(pos_, y.pos_);
  return out;
}

Element Element::leftDivide(const Element& y) const {
  requireSameFamily(y);
  Element out = *this;
  out.pos_ = family_->leftDivTable().at(pos_, y.pos_);
  return out;
}

Element Element::rightDivide(const Element& y) const {
  requireSameFamily(y);
  Element out = *this;
  out.pos_ = family_->rightDivTable().at(pos_, y.pos_);
  return out;
}

bool Element::operator==(const Element& y) const { return family_ == y.family_ && pos_ == y.pos_; }

}  // namespace loops
