#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "loops/quasigroup.hpp"

namespace loops {

// A symplectic cubic space on F_2^n: structure constants sigma_i, kappa_{ij}
// (i<j) and alpha_{ijk} (i<j<k), all bits. The induced forms on arbitrary
// vectors come from the expansion identities
//   sigma(u+v) = sigma(u) + sigma(v) + kappa(u,v)
//   kappa(u+v,w) = kappa(u,w) + kappa(v,w) + alpha(u,v,w)
// with kappa alternating and alpha trilinear alternating.
struct SymplecticCubicSpace {
  int n = 0;
  std::vector<std::uint8_t> sigma;  // n entries
  std::vector<std::uint8_t> kappa;  // C(n,2) entries, pairs (i<j) in lex order
  std::vector<std::uint8_t> alpha;  // C(n,3) entries, triples (i<j<k) in lex order

  static SymplecticCubicSpace zero(int n);

  // Structure-constant access, 0-based indices, any order; repeats give 0 for
  // kappa/alpha.
  int sigmaAt(int i) const;
  int kappaAt(int i, int j) const;
  int alphaAt(int i, int j, int k) const;
  void setSigma(int i, int v);
  void setKappa(int i, int j, int v);
  void setAlpha(int i, int j, int k, int v);
};

// Induced forms on bit vectors (bit i = basis vector e_i, 0-based).
int evalSigma(const SymplecticCubicSpace& s, std::uint32_t u);
int evalKappa(const SymplecticCubicSpace& s, std::uint32_t u, std::uint32_t v);
int evalAlpha(const SymplecticCubicSpace& s, std::uint32_t u, std::uint32_t v, std::uint32_t w);

// Text format: one header line "n <dim>", then lines "sigma i", "kappa i j",
// "alpha i j k" naming the structure constants equal to 1 (1-based indices,
// strictly increasing within a line). '#' starts a comment.
SymplecticCubicSpace parseSpace(std::string_view text);
std::string spaceToText(const SymplecticCubicSpace& s);

// Element of the multiplication group of the triality group: normal form
// g^a f^b h^c u^p v^q with a, b, c bit vectors, times an S_3 part acting as
// <rho, tau>. s is a permutation of {0,1,2}.
struct TrialityElement {
  std::uint32_t a = 0, b = 0, c = 0;
  std::uint8_t p = 0, q = 0;
  std::array<std::uint8_t, 3> s{0, 1, 2};

  auto key() const { return std::tie(a, b, c, p, q, s); }
  bool operator==(const TrialityElement& o) const { return key() == o.key(); }
  bool operator<(const TrialityElement& o) const { return key() < o.key(); }
};

class TrialityGroup {
public:
  // Builds the group arithmetic and runs the consistency gate; throws
  // InvalidSpace when the defining relations or the triality automorphisms
  // fail to hold.
  explicit TrialityGroup(SymplecticCubicSpace space);

  const SymplecticCubicSpace& space() const { return space_; }

  TrialityElement identity() const { return {}; }
  TrialityElement tau() const;
  TrialityElement rho() const;
  // Generators of the normal part: g_i, f_i, h_i (0-based i), u, v.
  TrialityElement gen(char kind, int i = 0) const;

  TrialityElement mul(const TrialityElement& x, const TrialityElement& y) const;
  TrialityElement inverse(const TrialityElement& x) const;
  TrialityElement conj(const TrialityElement& x, const TrialityElement& by) const;

  std::uint64_t normalPartOrder() const;  // 2^(2n + ... ) per normal form

private:
  struct NF {
    std::uint32_t a = 0, b = 0, c = 0;
    std::uint8_t p = 0, q = 0;
  };
  friend struct TrialityCollector;

  NF mulNF(const NF& x, const NF& y) const;
  NF invNF(const NF& x) const;
  NF applyAut(const std::array<std::uint8_t, 3>& s, const NF& x) const;
  NF applyRho(const NF& x) const;
  NF applyTau(const NF& x) const;
  void consistencyGate() const;

  SymplecticCubicSpace space_;
};

// The loop read off a conjugacy class: class of tau under the extended group,
// elements sorted by normal form; ct[i][j] = position of s_i^rho s_j^(rho^2)
// s_i^rho. Throws ClassNotClosed when a product leaves the class.
struct TrialityLoopResult {
  Quasigroup loop;                      // normalized
  std::vector<TrialityElement> classElements;
  CanonicalTable rawTable;              // pre-normalization table
};
TrialityLoopResult trialityLoopFromClass(const TrialityGroup& g);

Quasigroup codeLoopFromSpace(const SymplecticCubicSpace& s);

struct CodeLoopBasis {
  SymplecticCubicSpace space;
  std::vector<int> basis;  // loop positions
};
// Greedy basis through the Frattini quotient; requires |L| = 2^(n+1) with a
// central two-element Frattini subloop.
CodeLoopBasis spaceFromCodeLoop(const Quasigroup& l);

// Deterministic search for a basis of l that reads off exactly the structure
// constants of s; empty when none exists.
std::vector<int> findBasisRealizing(const Quasigroup& l, const SymplecticCubicSpace& s);

}  // namespace loops
