#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "loops/quasigroup.hpp"

namespace testutil {

inline loops::Quasigroup fromRows(const std::vector<std::vector<int>>& rows,
                                  loops::Kind kind = loops::Kind::loop) {
  return loops::makeQuasigroup(loops::CanonicalTable::fromRows(rows), kind);
}

inline loops::Quasigroup cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n + 1;
  return fromRows(rows);
}

// Smallest nonassociative loop; Mlt = S5, Inn of order 24, simple.
inline loops::Quasigroup n5() {
  return fromRows({{1, 2, 3, 4, 5},
                   {2, 1, 4, 5, 3},
                   {3, 4, 5, 1, 2},
                   {4, 5, 2, 3, 1},
                   {5, 3, 1, 2, 4}});
}

inline loops::Quasigroup klein4() {
  return fromRows({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
}

// Symmetric group on 3 letters: 1 = id, 2 = (12), 3 = (13), 4 = (23),
// 5 = (123), 6 = (132); composition left to right.
inline loops::Quasigroup sym3() {
  return fromRows({{1, 2, 3, 4, 5, 6},
                   {2, 1, 5, 6, 3, 4},
                   {3, 6, 1, 5, 4, 2},
                   {4, 5, 6, 1, 2, 3},
                   {5, 4, 2, 3, 6, 1},
                   {6, 3, 4, 2, 1, 5}});
}

// The Steiner quasigroup on 3 points: idempotent, totally symmetric.
inline loops::Quasigroup steiner3() {
  return fromRows({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}, loops::Kind::quasigroup);
}

// Dihedral group of order 8 (symmetries of a square): r = rotation, s = flip;
// elements 1, r, r2, r3, s, rs, r2s, r3s.
inline loops::Quasigroup dihedral8() {
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  auto idx = [](int rot, int flip) { return flip * 4 + rot + 1; };
  for (int r1 = 0; r1 < 4; ++r1)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int r2 = 0; r2 < 4; ++r2)
        for (int f2 = 0; f2 < 2; ++f2) {
          // (r1,f1)(r2,f2): s r = r^-1 s
          int rot = f1 ? (r1 - r2 + 8) % 4 : (r1 + r2) % 4;
          rows[idx(r1, f1) - 1][idx(r2, f2) - 1] = idx(rot, f1 ^ f2);
        }
  return fromRows(rows);
}

// A random permutation of {1..n} fixing 1.
inline loops::Permutation randomIdentityFixingPerm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i >= 2; --i) {
    std::uniform_int_distribution<int> d(1, i);
    std::swap(img[i], img[d(rng)]);
  }
  return loops::Permutation::fromImages(std::move(img));
}

}  // namespace testutil
