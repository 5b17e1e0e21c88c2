#include "loops/codeloops.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "loops/error.hpp"
#include "loops/structure.hpp"
#include "loops/table.hpp"

namespace loops {

namespace {

int pairIndex(int n, int i, int j) {
  // lex rank of (i<j) among pairs from {0..n-1}
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

int tripleIndex(int n, int i, int j, int k) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += (n - 1 - a) * (n - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) idx += n - 1 - b;
  return idx + (k - j - 1);
}

}  // namespace

SymplecticCubicSpace SymplecticCubicSpace::zero(int n) {
  SymplecticCubicSpace s;
  s.n = n;
  s.sigma.assign(n, 0);
  s.kappa.assign(n * (n - 1) / 2, 0);
  s.alpha.assign(n * (n - 1) * (n - 2) / 6, 0);
  return s;
}

int SymplecticCubicSpace::sigmaAt(int i) const {
  if (i < 0 || i >= n) fail(Errc::DimensionMismatch, "sigma index");
  return sigma[i];
}

int SymplecticCubicSpace::kappaAt(int i, int j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n) fail(Errc::DimensionMismatch, "kappa index");
  return kappa[pairIndex(n, i, j)];
}

int SymplecticCubicSpace::alphaAt(int i, int j, int k) const {
  int a = std::min({i, j, k}), c = std::max({i, j, k});
  int b = i + j + k - a - c;
  if (a == b || b == c) return 0;
  if (a < 0 || c >= n) fail(Errc::DimensionMismatch, "alpha index");
  return alpha[tripleIndex(n, a, b, c)];
}

void SymplecticCubicSpace::setSigma(int i, int v) {
  if (i < 0 || i >= n) fail(Errc::DimensionMismatch, "sigma index");
  sigma[i] = static_cast<std::uint8_t>(v & 1);
}

void SymplecticCubicSpace::setKappa(int i, int j, int v) {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= n) fail(Errc::DimensionMismatch, "kappa index");
  kappa[pairIndex(n, i, j)] = static_cast<std::uint8_t>(v & 1);
}

void SymplecticCubicSpace::setAlpha(int i, int j, int k, int v) {
  int a = std::min({i, j, k}), c = std::max({i, j, k});
  int b = i + j + k - a - c;
  if (a < 0 || a == b || b == c || c >= n) fail(Errc::DimensionMismatch, "alpha index");
  alpha[tripleIndex(n, a, b, c)] = static_cast<std::uint8_t>(v & 1);
}

int evalAlpha(const SymplecticCubicSpace& s, std::uint32_t u, std::uint32_t v, std::uint32_t w) {
  int acc = 0;
  for (int i = 0; i < s.n; ++i) {
    if (!(u >> i & 1)) continue;
    for (int j = 0; j < s.n; ++j) {
      if (!(v >> j & 1)) continue;
      for (int k = 0; k < s.n; ++k)
        if (w >> k & 1) acc ^= s.alphaAt(i, j, k);
    }
  }
  return acc;
}

int evalKappa(const SymplecticCubicSpace& s, std::uint32_t u, std::uint32_t v) {
  int acc = 0;
  for (int a = 0; a < s.n; ++a) {
    if (!(u >> a & 1)) continue;
    for (int b = 0; b < s.n; ++b)
      if (v >> b & 1) acc ^= s.kappaAt(a, b);
    // triples with two indices in u
    for (int a2 = a + 1; a2 < s.n; ++a2) {
      if (!(u >> a2 & 1)) continue;
      for (int b = 0; b < s.n; ++b)
        if (v >> b & 1) acc ^= s.alphaAt(a, a2, b);
    }
    // triples with two indices in v
    for (int b = 0; b < s.n; ++b) {
      if (!(v >> b & 1)) continue;
      for (int b2 = b + 1; b2 < s.n; ++b2)
        if (v >> b2 & 1) acc ^= s.alphaAt(a, b, b2);
    }
  }
  return acc;
}

int evalSigma(const SymplecticCubicSpace& s, std::uint32_t u) {
  int acc = 0;
  for (int i = 0; i < s.n; ++i) {
    if (!(u >> i & 1)) continue;
    acc ^= s.sigmaAt(i);
    for (int j = i + 1; j < s.n; ++j) {
      if (!(u >> j & 1)) continue;
      acc ^= s.kappaAt(i, j);
      for (int k = j + 1; k < s.n; ++k)
        if (u >> k & 1) acc ^= s.alphaAt(i, j, k);
    }
  }
  return acc;
}

SymplecticCubicSpace parseSpace(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  SymplecticCubicSpace s;
  bool haveHeader = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!haveHeader) {
      int dim = 0;
      if (word != "n" || !(ls >> dim) || dim < 1 || dim > 20)
        fail(Errc::InvalidSpace, "expected header line 'n <dim>'");
      s = SymplecticCubicSpace::zero(dim);
      haveHeader = true;
      std::string extra;
      if (ls >> extra) fail(Errc::InvalidSpace, "trailing tokens on header line");
      continue;
    }
    auto readIdx = [&](int count, int out[3]) {
      for (int t = 0; t < count; ++t) {
        if (!(ls >> out[t]) || out[t] < 1 || out[t] > s.n)
          fail(Errc::InvalidSpace, "bad index in line: " + line);
        if (t > 0 && out[t] <= out[t - 1])
          fail(Errc::InvalidSpace, "indices must be strictly increasing: " + line);
      }
      std::string extra;
      if (ls >> extra) fail(Errc::InvalidSpace, "trailing tokens: " + line);
    };
    int idx[3];
    if (word == "sigma") {
      readIdx(1, idx);
      s.setSigma(idx[0] - 1, 1);
    } else if (word == "kappa") {
      readIdx(2, idx);
      s.setKappa(idx[0] - 1, idx[1] - 1, 1);
    } else if (word == "alpha") {
      readIdx(3, idx);
      s.setAlpha(idx[0] - 1, idx[1] - 1, idx[2] - 1, 1);
    } else {
      fail(Errc::InvalidSpace, "unknown line: " + line);
    }
  }
  if (!haveHeader) fail(Errc::InvalidSpace, "missing header line 'n <dim>'");
  return s;
}

std::string spaceToText(const SymplecticCubicSpace& s) {
  std::string out = "n " + std::to_string(s.n) + "\n";
  for (int i = 0; i < s.n; ++i)
    if (s.sigmaAt(i)) out += "sigma " + std::to_string(i + 1) + "\n";
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (s.kappaAt(i, j))
        out += "kappa " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      for (int k = j + 1; k < s.n; ++k)
        if (s.alphaAt(i, j, k))
          out += "alpha " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                 std::to_string(k + 1) + "\n";
  return out;
}

// -- collection machinery -----------------------------------------------------

namespace {

// Letter kinds ordered g < f < h < u < v; words collect to
// g^a f^b h^c u^p v^q with ascending indices within a kind.
struct Letter {
  int kind;  // 0 g, 1 f, 2 h, 3 u, 4 v
  int idx;   // generator index for g/f/h, 0 for u/v
  bool operator==(const Letter& o) const { return kind == o.kind && idx == o.idx; }
};

using Word = std::vector<Letter>;

}  // namespace

struct TrialityCollector {
  const SymplecticCubicSpace& s;

  Word wordOf(const TrialityGroup::NF& x) const {
    Word w;
    for (int i = 0; i < s.n; ++i)
      if (x.a >> i & 1) w.push_back({0, i});
    for (int i = 0; i < s.n; ++i)
      if (x.b >> i & 1) w.push_back({1, i});
    for (int i = 0; i < s.n; ++i)
      if (x.c >> i & 1) w.push_back({2, i});
    if (x.p) w.push_back({3, 0});
    if (x.q) w.push_back({4, 0});
    return w;
  }

  Word squareOf(const Letter& x) const {
    Word w;
    switch (x.kind) {
      case 0:
        if (s.sigmaAt(x.idx)) w.push_back({3, 0});
        break;
      case 1:
        if (s.sigmaAt(x.idx)) w.push_back({4, 0});
        break;
      default: break;  // h, u, v are involutions
    }
    return w;
  }

  // [X, Y] as a word, for the swap rule X Y -> Y X [X, Y].
  Word commutatorOf(const Letter& x, const Letter& y) const {
    Word w;
    int hi = std::max(x.kind, y.kind), lo = std::min(x.kind, y.kind);
    if (hi >= 3) return w;  // u, v central
    if (hi == 2 && lo == 2) return w;  // h's commute
    if (hi == 2) {
      // [g_i, h_j] = u^{delta}, [f_i, h_j] = v^{delta}
      const Letter& gf = x.kind == 2 ? y : x;
      const Letter& h = x.kind == 2 ? x : y;
      if (gf.idx == h.idx) w.push_back({gf.kind == 0 ? 3 : 4, 0});
      return w;
    }
    if (x.kind == y.kind) {
      // [g_i, g_j] = u^{kappa}, [f_i, f_j] = v^{kappa}
      if (s.kappaAt(x.idx, y.idx)) w.push_back({x.kind == 0 ? 3 : 4, 0});
      return w;
    }
    // [g_i, f_j] = [f_j, g_i] = (uv)^{kappa} prod_k h_k^{alpha}
    if (s.kappaAt(x.idx, y.idx)) {
      w.push_back({3, 0});
      w.push_back({4, 0});
    }
    for (int k = 0; k < s.n; ++k)
      if (s.alphaAt(x.idx, y.idx, k)) w.push_back({2, k});
    return w;
  }

  TrialityGroup::NF collect(Word w) const {
    for (;;) {
      bool changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Letter x = w[i];
        const Letter y = w[i + 1];
        if (x == y) {
          Word sq = squareOf(x);
          w.erase(w.begin() + i, w.begin() + i + 2);
          w.insert(w.begin() + i, sq.begin(), sq.end());
          changed = true;
          break;
        }
        if (std::tie(y.kind, y.idx) < std::tie(x.kind, x.idx)) {
          Word comm = commutatorOf(x, y);
          w[i] = y;
          w[i + 1] = x;
          w.insert(w.begin() + i + 2, comm.begin(), comm.end());
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    TrialityGroup::NF out;
    for (const Letter& l : w) {
      switch (l.kind) {
        case 0: out.a |= 1u << l.idx; break;
        case 1: out.b |= 1u << l.idx; break;
        case 2: out.c |= 1u << l.idx; break;
        case 3: out.p ^= 1; break;
        case 4: out.q ^= 1; break;
      }
    }
    return out;
  }

  Word inverseWord(const Word& w) const {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(*it);
      Word sq = squareOf(*it);  // letter^-1 = letter * (letter^2), squares central involutions
      out.insert(out.end(), sq.begin(), sq.end());
    }
    return out;
  }
};

// -- triality group -----------------------------------------------------------

namespace {

using S3 = std::array<std::uint8_t, 3>;

constexpr S3 kIdPerm{0, 1, 2};
constexpr S3 kRhoPerm{1, 2, 0};  // 0 -> 1 -> 2 -> 0
constexpr S3 kTauPerm{0, 2, 1};

// (x o y)[i] = x[y[i]]: apply y first, then x.
S3 composeS3(const S3& x, const S3& y) { return {x[y[0]], x[y[1]], x[y[2]]}; }

S3 invertS3(const S3& x) {
  S3 out{};
  for (int i = 0; i < 3; ++i) out[x[i]] = static_cast<std::uint8_t>(i);
  return out;
}

// Decompose s = tau^a o rho^b.
std::pair<int, int> decomposeS3(const S3& s) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) {
      S3 cur = kIdPerm;
      for (int t = 0; t < b; ++t) cur = composeS3(kRhoPerm, cur);
      for (int t = 0; t < a; ++t) cur = composeS3(kTauPerm, cur);
      if (cur == s) return {a, b};
    }
  fail(Errc::InvalidSpace, "not a valid S3 part");
}

}  // namespace

TrialityGroup::TrialityGroup(SymplecticCubicSpace space) : space_(std::move(space)) {
  consistencyGate();
}

TrialityElement TrialityGroup::tau() const {
  TrialityElement e;
  e.s = kTauPerm;
  return e;
}

TrialityElement TrialityGroup::rho() const {
  TrialityElement e;
  e.s = kRhoPerm;
  return e;
}

TrialityElement TrialityGroup::gen(char kind, int i) const {
  TrialityElement e;
  switch (kind) {
    case 'g': e.a = 1u << i; break;
    case 'f': e.b = 1u << i; break;
    case 'h': e.c = 1u << i; break;
    case 'u': e.p = 1; break;
    case 'v': e.q = 1; break;
    default: fail(Errc::InvalidSpace, "unknown generator kind");
  }
  return e;
}

TrialityGroup::NF TrialityGroup::mulNF(const NF& x, const NF& y) const {
  TrialityCollector c{space_};
  Word w = c.wordOf(x);
  Word wy = c.wordOf(y);
  w.insert(w.end(), wy.begin(), wy.end());
  return c.collect(std::move(w));
}

TrialityGroup::NF TrialityGroup::invNF(const NF& x) const {
  TrialityCollector c{space_};
  return c.collect(c.inverseWord(c.wordOf(x)));
}

TrialityGroup::NF TrialityGroup::applyTau(const NF& x) const {
  // swapping the g- and f-blocks reorders the word; re-collect for corrections
  TrialityCollector c{space_};
  Word w;
  for (int i = 0; i < space_.n; ++i)
    if (x.a >> i & 1) w.push_back({1, i});  // g_i -> f_i
  for (int i = 0; i < space_.n; ++i)
    if (x.b >> i & 1) w.push_back({0, i});  // f_i -> g_i
  for (int i = 0; i < space_.n; ++i)
    if (x.c >> i & 1) w.push_back({2, i});
  if (x.p) w.push_back({4, 0});  // u -> v
  if (x.q) w.push_back({3, 0});  // v -> u
  return c.collect(std::move(w));
}

TrialityGroup::NF TrialityGroup::applyRho(const NF& x) const {
  TrialityCollector c{space_};
  Word w;
  for (int i = 0; i < space_.n; ++i)
    if (x.a >> i & 1) w.push_back({1, i});  // g_i -> f_i
  for (int i = 0; i < space_.n; ++i)
    if (x.b >> i & 1) {
      // f_i -> (g_i f_i)^-1 = f_i v^{sigma_i} g_i u^{sigma_i}
      w.push_back({1, i});
      if (space_.sigmaAt(i)) w.push_back({4, 0});
      w.push_back({0, i});
      if (space_.sigmaAt(i)) w.push_back({3, 0});
    }
  for (int i = 0; i < space_.n; ++i)
    if (x.c >> i & 1) w.push_back({2, i});
  if (x.p) w.push_back({4, 0});  // u -> v
  if (x.q) {
    w.push_back({3, 0});  // v -> uv
    w.push_back({4, 0});
  }
  return c.collect(std::move(w));
}

TrialityGroup::NF TrialityGroup::applyAut(const S3& s, const NF& x) const {
  auto [a, b] = decomposeS3(s);
  NF cur = x;
  for (int t = 0; t < b; ++t) cur = applyRho(cur);
  for (int t = 0; t < a; ++t) cur = applyTau(cur);
  return cur;
}

TrialityElement TrialityGroup::mul(const TrialityElement& x, const TrialityElement& y) const {
  NF ym = applyAut(x.s, NF{y.a, y.b, y.c, y.p, y.q});
  NF m = mulNF(NF{x.a, x.b, x.c, x.p, x.q}, ym);
  TrialityElement out;
  out.a = m.a;
  out.b = m.b;
  out.c = m.c;
  out.p = m.p;
  out.q = m.q;
  out.s = composeS3(x.s, y.s);
  return out;
}

TrialityElement TrialityGroup::inverse(const TrialityElement& x) const {
  S3 si = invertS3(x.s);
  NF m = applyAut(si, invNF(NF{x.a, x.b, x.c, x.p, x.q}));
  TrialityElement out;
  out.a = m.a;
  out.b = m.b;
  out.c = m.c;
  out.p = m.p;
  out.q = m.q;
  out.s = si;
  return out;
}

TrialityElement TrialityGroup::conj(const TrialityElement& x, const TrialityElement& by) const {
  return mul(mul(inverse(by), x), by);
}

std::uint64_t TrialityGroup::normalPartOrder() const {
  return std::uint64_t{1} << (3 * space_.n + 2);
}

void TrialityGroup::consistencyGate() const {
  std::mt19937 rng(20240811);
  auto randomNF = [&] {
    std::uint32_t mask = (space_.n >= 32) ? ~0u : ((1u << space_.n) - 1);
    NF x;
    x.a = rng() & mask;
    x.b = rng() & mask;
    x.c = rng() & mask;
    x.p = rng() & 1;
    x.q = rng() & 1;
    return x;
  };
  auto eq = [](const NF& x, const NF& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.p == y.p && x.q == y.q;
  };
  for (int trial = 0; trial < 400; ++trial) {
    NF x = randomNF(), y = randomNF(), z = randomNF();
    if (!eq(mulNF(mulNF(x, y), z), mulNF(x, mulNF(y, z))))
      fail(Errc::InvalidSpace, "collection is not associative");
    if (!eq(mulNF(x, invNF(x)), NF{}))
      fail(Errc::InvalidSpace, "inverse computation failed");
    if (!eq(applyTau(mulNF(x, y)), mulNF(applyTau(x), applyTau(y))))
      fail(Errc::InvalidSpace, "tau is not a homomorphism");
    if (!eq(applyRho(mulNF(x, y)), mulNF(applyRho(x), applyRho(y))))
      fail(Errc::InvalidSpace, "rho is not a homomorphism");
    if (!eq(applyTau(applyTau(x)), x)) fail(Errc::InvalidSpace, "tau^2 != id");
    if (!eq(applyRho(applyRho(applyRho(x))), x)) fail(Errc::InvalidSpace, "rho^3 != id");
    if (!eq(applyTau(applyRho(applyTau(applyRho(x)))), x))
      fail(Errc::InvalidSpace, "(rho tau)^2 != id");
  }
}

TrialityLoopResult trialityLoopFromClass(const TrialityGroup& g) {
  std::vector<TrialityElement> gens;
  for (int i = 0; i < g.space().n; ++i) {
    gens.push_back(g.gen('g', i));
    gens.push_back(g.gen('f', i));
    gens.push_back(g.gen('h', i));
  }
  gens.push_back(g.gen('u'));
  gens.push_back(g.gen('v'));

  std::set<TrialityElement> cls{g.tau()};
  std::vector<TrialityElement> frontier{g.tau()};
  while (!frontier.empty()) {
    std::vector<TrialityElement> next;
    for (const auto& x : frontier)
      for (const auto& by : gens) {
        TrialityElement y = g.conj(x, by);
        if (cls.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }

  std::vector<TrialityElement> elems(cls.begin(), cls.end());
  int m = static_cast<int>(elems.size());
  auto positionOf = [&](const TrialityElement& x) {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || !(*it == x))
      fail(Errc::ClassNotClosed, "product left the conjugacy class");
    return static_cast<int>(it - elems.begin()) + 1;
  };

  TrialityElement r = g.rho();
  TrialityElement r2 = g.mul(r, r);
  std::vector<TrialityElement> conjR(m), conjR2(m);
  for (int i = 0; i < m; ++i) {
    conjR[i] = g.conj(elems[i], r);
    conjR2[i] = g.conj(elems[i], r2);
  }
  CanonicalTable raw(m, std::vector<int>(m * m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      TrialityElement prod = g.mul(g.mul(conjR[i - 1], conjR2[j - 1]), conjR[i - 1]);
      raw.set(i, j, positionOf(prod));
    }
  if (!raw.isLatin()) fail(Errc::ClassNotClosed, "class multiplication is not a quasigroup");

  TrialityLoopResult out;
  out.classElements = std::move(elems);
  out.rawTable = raw;
  out.loop = makeQuasigroup(normalizeTableFull(raw).table, Kind::loop);
  return out;
}

Quasigroup codeLoopFromSpace(const SymplecticCubicSpace& s) {
  TrialityGroup g(s);
  return trialityLoopFromClass(g).loop;
}

namespace {

struct FrattiniData {
  int n = 0;
  int phi = 0;                  // position of the nonidentity Frattini element
  std::vector<int> naturalMap;  // position -> coset index in L/Phi
  Quasigroup factor;
};

FrattiniData frattiniData(const Quasigroup& l) {
  if (!l.isLoop()) fail(Errc::LoopRequired, "code loop analysis");
  int order = l.order();
  if (order < 4 || (order & (order - 1)) != 0)
    fail(Errc::NotPowerOfTwo, "order " + std::to_string(order) + " is not 2^(n+1), n >= 1");
  FrattiniData d;
  d.n = 0;
  while ((1 << (d.n + 1)) < order) ++d.n;

  Quasigroup phiSub = verbalSubloop(l, VerbalKind::frattini);
  if (phiSub.order() != 2)
    fail(Errc::NotSmallFrattini,
         "Frattini subloop has order " + std::to_string(phiSub.order()));
  int phi = 0;
  for (int p : phiSub.posInParent()) {
    int r = l.relativePosOf(p);
    if (r != 1) phi = r;
  }
  std::vector<int> center = centralParts(l, CentralKind::center);
  if (std::find(center.begin(), center.end(), phi) == center.end())
    fail(Errc::NotCentral, "Frattini subloop is not central");
  d.phi = phi;
  FactorLoop f = factorLoopOf(l, subquasigroup(l, {1, phi}, Kind::loop));
  d.naturalMap = std::move(f.naturalMap);
  d.factor = std::move(f.loop);
  return d;
}

}  // namespace

CodeLoopBasis spaceFromCodeLoop(const Quasigroup& l) {
  FrattiniData d = frattiniData(l);
  std::set<int> spanF{1};
  std::vector<int> basis;
  for (int x = 2; x <= l.order() && static_cast<int>(basis.size()) < d.n; ++x) {
    int fx = d.naturalMap[x - 1];
    if (spanF.count(fx)) continue;
    basis.push_back(x);
    std::set<int> grown = spanF;
    for (int sp : spanF) grown.insert(d.factor.mul(sp, fx));
    spanF = std::move(grown);
  }
  if (static_cast<int>(basis.size()) != d.n)
    fail(Errc::NotSmallFrattini, "Frattini quotient has too small a rank");

  CodeLoopBasis out;
  out.basis = basis;
  out.space = SymplecticCubicSpace::zero(d.n);
  auto bit = [&](int pos) {
    if (pos == 1) return 0;
    if (pos == d.phi) return 1;
    fail(Errc::NotSmallFrattini, "form value outside the Frattini subloop");
  };
  for (int i = 0; i < d.n; ++i) {
    out.space.setSigma(i, bit(l.mul(basis[i], basis[i])));
    for (int j = i + 1; j < d.n; ++j) {
      out.space.setKappa(i, j, bit(commutatorOf(l, basis[i], basis[j])));
      for (int k = j + 1; k < d.n; ++k)
        out.space.setAlpha(i, j, k, bit(associatorOf(l, basis[i], basis[j], basis[k])));
    }
  }
  return out;
}

std::vector<int> findBasisRealizing(const Quasigroup& l, const SymplecticCubicSpace& s) {
  FrattiniData d = frattiniData(l);
  if (d.n != s.n) return {};
  auto bit = [&](int pos) { return pos == d.phi ? 1 : pos == 1 ? 0 : -1; };

  std::vector<int> basis;
  std::set<int> spanF{1};
  auto dfs = [&](auto&& self) -> bool {
    int dpt = static_cast<int>(basis.size());
    if (dpt == d.n) return true;
    for (int x = 2; x <= l.order(); ++x) {
      if (spanF.count(d.naturalMap[x - 1])) continue;
      if (bit(l.mul(x, x)) != s.sigmaAt(dpt)) continue;
      bool ok = true;
      for (int i = 0; i < dpt && ok; ++i) {
        if (bit(commutatorOf(l, basis[i], x)) != s.kappaAt(i, dpt)) ok = false;
        for (int j = i + 1; j < dpt && ok; ++j)
          if (bit(associatorOf(l, basis[i], basis[j], x)) != s.alphaAt(i, j, dpt)) ok = false;
      }
      if (!ok) continue;
      basis.push_back(x);
      std::set<int> saved = spanF;
      int fx = d.naturalMap[x - 1];
      std::set<int> grown = spanF;
      for (int sp : spanF) grown.insert(d.factor.mul(sp, fx));
      spanF = std::move(grown);
      if (self(self)) return true;
      basis.pop_back();
      spanF = std::move(saved);
    }
    return false;
  };
  if (!dfs(dfs)) return {};
  return basis;
}

}  // namespace loops
