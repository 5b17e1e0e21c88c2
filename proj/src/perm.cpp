#include "loops/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace loops {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::fromImages(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) fail(Errc::DegreeMismatch, "image list is not a bijection of {1..n}");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& then) const {
  if (degree() != then.degree()) fail(Errc::DegreeMismatch, "product of permutations of different degree");
  Permutation out;
  out.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img_[i] = then.img_[img_[i] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img_[img_[i] - 1] = i + 1;
  return out;
}

bool Permutation::isIdentity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string Permutation::cycleString() const {
  std::ostringstream os;
  std::vector<char> done(degree() + 1, 0);
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (done[i] || img_[i - 1] == i) continue;
    any = true;
    os << '(' << i;
    done[i] = 1;
    for (int j = img_[i - 1]; j != i; j = img_[j - 1]) {
      os << ' ' << j;
      done[j] = 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace loops
