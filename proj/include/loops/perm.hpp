#pragma once

#include <string>
#include <vector>

#include "loops/error.hpp"

namespace loops {

// Bijection of {1..n}. Products compose left to right: (p*q)(x) = q(p(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  static Permutation fromImages(std::vector<int> images);
  // One-line images on {1..degree}; images[i-1] is the image of i.
  const std::vector<int>& images() const { return img_; }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point - 1]; }

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;
  bool isIdentity() const;

  std::string cycleString() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

inline Permutation conjugate(const Permutation& p, const Permutation& by) {
  return by.inverse() * p * by;
}

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace loops
