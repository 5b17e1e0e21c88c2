#pragma once

#include <string>
#include <vector>

#include "loops/quasigroup.hpp"

namespace loops {

// Number of non-associative triples of the groupoid defined by the table.
long long muOf(const CanonicalTable& t);
long long muOf(const Quasigroup& q);

// Coset block structure of a loop modulo a subloop, with a central involution
// used for block flips.
struct BlockStructure {
  int numBlocks = 0;
  std::vector<int> blockOf;              // position -> block index (1-based)
  std::vector<std::vector<int>> blocks;  // block -> sorted positions
  int h = 0;                             // central involution, a position of l
  std::vector<int> hTranslate;           // position -> h * position
};

// Validates: s is a subloop of l whose right cosets partition l, h is a
// central involution of l lying in s.
BlockStructure makeBlockStructure(const Quasigroup& l, const Quasigroup& s, int h);

// Multiply the (i,j) and (j,i) blocks of t entrywise by h. i != j required.
CanonicalTable blockFlip(const CanonicalTable& t, const BlockStructure& b, int i, int j);

struct GreedyStep {
  int i = 0, j = 0;
  long long mu = 0;
};

struct GreedyResult {
  Quasigroup loop;
  long long mu = 0;
  std::vector<GreedyStep> trace;
};

// Greedy mu-minimization over block flips (i, j) with 2 <= i < j, ties broken
// by lexicographically least (i, j); stops when no flip decreases mu.
GreedyResult greedySymmetrize(const Quasigroup& l, const Quasigroup& s, int h);

std::string traceToText(const GreedyResult& r);

}  // namespace loops
